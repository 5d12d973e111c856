import django.db.models.deletion
import django.utils.timezone
import model_utils.fields
from django.db import migrations
from django.db import models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name="BenchSession",
            fields=[
                ("id", models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name="ID")),
                ("created", model_utils.fields.AutoCreatedField(default=django.utils.timezone.now, editable=False, verbose_name="created")),
                ("modified", model_utils.fields.AutoLastModifiedField(default=django.utils.timezone.now, editable=False, verbose_name="modified")),
                ("config_path", models.CharField(max_length=500)),
                ("methods", models.CharField(max_length=255)),
                ("repeats", models.PositiveIntegerField()),
                ("output_dir", models.CharField(blank=True, max_length=500)),
                ("completed", models.BooleanField(default=False)),
            ],
            options={
                "ordering": ["-created"],
            },
        ),
        migrations.CreateModel(
            name="FalsificationRun",
            fields=[
                ("id", models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name="ID")),
                ("created", model_utils.fields.AutoCreatedField(default=django.utils.timezone.now, editable=False, verbose_name="created")),
                ("modified", model_utils.fields.AutoLastModifiedField(default=django.utils.timezone.now, editable=False, verbose_name="modified")),
                ("mode", models.CharField(choices=[("falsify", "Falsify"), ("verify", "Verify"), ("bench", "Bench")], default="falsify", max_length=16)),
                ("method", models.CharField(max_length=64)),
                ("environment", models.CharField(max_length=64)),
                ("specification", models.TextField()),
                ("seed", models.DecimalField(decimal_places=0, max_digits=20)),
                ("budget", models.PositiveIntegerField()),
                ("evaluations", models.PositiveIntegerField()),
                ("worst_phi", models.FloatField()),
                ("counterexample_count", models.PositiveIntegerField()),
                ("falsified", models.BooleanField(default=False)),
                ("verified", models.BooleanField(default=False)),
                ("stopped_early", models.BooleanField(default=False)),
                ("convergence_iteration", models.PositiveIntegerField(blank=True, null=True)),
                ("wall_time", models.FloatField(help_text="seconds")),
                ("report_path", models.CharField(blank=True, max_length=500)),
                ("session", models.ForeignKey(blank=True, null=True, on_delete=django.db.models.deletion.CASCADE, related_name="runs", to="runs.benchsession")),
            ],
            options={
                "ordering": ["-created"],
            },
        ),
    ]
