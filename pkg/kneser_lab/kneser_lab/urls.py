"""
URL configuration for kneser_lab project.

The toolkit is driven from management commands; the only web surface is
the admin, for browsing persisted verification runs.
"""

from django.contrib import admin
from django.urls import path

urlpatterns = [
    path("admin/", admin.site.urls),
]
