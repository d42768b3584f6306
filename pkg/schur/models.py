from django.db import models
from django.utils import timezone

from .services.families import FamilyKind


class VerificationRun(models.Model):
    """A stored verification report (``manage.py verify ... --record``)."""

    suite = models.CharField(max_length=32)
    family = models.CharField(max_length=20, choices=FamilyKind.choices, default=FamilyKind.CLASSICAL)
    family_label = models.CharField(max_length=200, blank=True)
    parameters = models.JSONField(default=dict)
    seed = models.IntegerField(null=True, blank=True)
    cases_checked = models.PositiveIntegerField(default=0)
    failures = models.PositiveIntegerField(default=0)
    passed = models.BooleanField(default=True)
    counterexample = models.JSONField(null=True, blank=True)
    created_at = models.DateTimeField(default=timezone.now)

    class Meta:
        ordering = ['-created_at', '-id']
        indexes = [
            models.Index(fields=['suite', 'family'], name='schur_run_suite_family_idx'),
        ]

    def __str__(self):
        status = 'passed' if self.passed else 'failed'
        return f"{self.suite} [{self.family_label or self.family}] {status}"

    @classmethod
    def from_report(cls, report, family):
        return cls.objects.create(
            suite=report.suite,
            family=family.name,
            family_label=report.family,
            parameters=report.parameters,
            seed=report.parameters.get('seed'),
            cases_checked=report.cases,
            failures=report.failures,
            passed=report.passed,
            counterexample=report.counterexample,
        )
