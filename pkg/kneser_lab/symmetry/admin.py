# admin.py
from django.contrib import admin
from .models import VerificationRun, ClaimRecord


class ClaimRecordInline(admin.TabularInline):
    model = ClaimRecord
    extra = 0
    readonly_fields = ["claim_id", "instance", "expected", "observed", "passed", "elapsed", "error"]
    can_delete = False


@admin.register(VerificationRun)
class VerificationRunAdmin(admin.ModelAdmin):
    list_display = ["id", "max_n", "seed", "passed", "failed", "errored", "created_at"]
    list_filter = ["max_n"]
    readonly_fields = ["created_at"]
    date_hierarchy = "created_at"
    inlines = [ClaimRecordInline]


@admin.register(ClaimRecord)
class ClaimRecordAdmin(admin.ModelAdmin):
    list_display = ["id", "run", "claim_id", "instance", "passed", "elapsed"]
    list_filter = ["claim_id", "passed", "run"]
    search_fields = ["instance", "error"]
