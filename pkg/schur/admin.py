from django.conf import settings
from django.contrib import admin
from django.utils.html import format_html

from .models import VerificationRun

admin.site.site_header = settings.ADMIN_SITE_HEADER


@admin.register(VerificationRun)
class VerificationRunAdmin(admin.ModelAdmin):
    list_display = [
        'suite', 'family_label', 'cases_checked', 'failures', 'outcome', 'created_at'
    ]
    list_filter = ['suite', 'family', 'passed']
    search_fields = ['suite', 'family_label']
    readonly_fields = ['created_at']

    def outcome(self, obj):
        if obj.passed:
            return format_html('<span style="color: green;">● Passed</span>')
        return format_html('<span style="color: red;">● Failed</span>')
    outcome.short_description = 'Outcome'
