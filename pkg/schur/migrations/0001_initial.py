# Generated by Django 4.2.7 on 2026-10-17 09:12

import django.utils.timezone
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='VerificationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('suite', models.CharField(max_length=32)),
                ('family', models.CharField(choices=[('classical', 'Classical symmetric functions'), ('lie', 'Universal characters of classical Lie algebras'), ('shifted', 'Shifted Schur functions'), ('linrec', 'Linear recurrence'), ('tridiagonal', 'Tridiagonal recurrence')], default='classical', max_length=20)),
                ('family_label', models.CharField(blank=True, max_length=200)),
                ('parameters', models.JSONField(default=dict)),
                ('seed', models.IntegerField(blank=True, null=True)),
                ('cases_checked', models.PositiveIntegerField(default=0)),
                ('failures', models.PositiveIntegerField(default=0)),
                ('passed', models.BooleanField(default=True)),
                ('counterexample', models.JSONField(blank=True, null=True)),
                ('created_at', models.DateTimeField(default=django.utils.timezone.now)),
            ],
            options={
                'ordering': ['-created_at', '-id'],
                'indexes': [models.Index(fields=['suite', 'family'], name='schur_run_suite_family_idx')],
            },
        ),
    ]
