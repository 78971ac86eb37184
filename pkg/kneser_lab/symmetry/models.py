# models.py
from django.db import models, transaction

from .theorem_suite import ClaimId


class VerificationRun(models.Model):
    max_n = models.PositiveIntegerField()
    seed = models.IntegerField(default=0)
    budget = models.PositiveBigIntegerField()
    passed = models.PositiveIntegerField(default=0)
    failed = models.PositiveIntegerField(default=0)
    errored = models.PositiveIntegerField(default=0)
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ["-created_at"]

    def __str__(self):
        return f"Run #{self.pk} (n <= {self.max_n}): {self.passed} passed, {self.failed} failed"

    @property
    def all_passed(self):
        return self.failed == 0 and self.errored == 0

    @classmethod
    def record(cls, reports, config):
        """Persist a finished suite run with one ClaimRecord per report."""
        with transaction.atomic():
            run = cls.objects.create(
                max_n=config.max_n,
                seed=config.seed,
                budget=config.budget,
                passed=sum(r.passed for r in reports),
                failed=sum(not r.passed and not r.error for r in reports),
                errored=sum(bool(r.error) for r in reports),
            )
            ClaimRecord.objects.bulk_create(
                ClaimRecord.from_report(run, report) for report in reports
            )
        return run


class ClaimRecord(models.Model):
    run = models.ForeignKey(VerificationRun, on_delete=models.CASCADE, related_name="records")
    claim_id = models.CharField(max_length=32, choices=ClaimId.choices)
    instance = models.CharField(max_length=32)
    expected = models.JSONField(null=True)
    observed = models.JSONField(null=True)
    passed = models.BooleanField()
    elapsed = models.DurationField()
    citation = models.TextField()
    error = models.TextField(blank=True)

    class Meta:
        ordering = ["id"]

    def __str__(self):
        status = "pass" if self.passed else "fail"
        return f"{self.claim_id} {self.instance} - {status}"

    @classmethod
    def from_report(cls, run, report):
        record = report.to_record()
        return cls(
            run=run,
            claim_id=record["claim_id"],
            instance=record["instance"],
            expected=record["expected"],
            observed=record["observed"],
            passed=report.passed,
            elapsed=report.elapsed,
            citation=report.citation,
            error=report.error,
        )
