"""Import/Export resources for run records."""

from import_export import fields
from import_export import resources
from import_export.widgets import ForeignKeyWidget

from .models import BenchSession
from .models import FalsificationRun


class FalsificationRunResource(resources.ModelResource):
    session = fields.Field(
        column_name="session",
        attribute="session",
        widget=ForeignKeyWidget(BenchSession, field="pk"),
    )

    class Meta:
        model = FalsificationRun
        fields = (
            "id",
            "session",
            "mode",
            "method",
            "environment",
            "seed",
            "budget",
            "evaluations",
            "worst_phi",
            "counterexample_count",
            "falsified",
            "verified",
            "stopped_early",
            "convergence_iteration",
            "wall_time",
            "report_path",
        )
        export_order = fields
        skip_unchanged = True
        report_skipped = True


class BenchSessionResource(resources.ModelResource):
    class Meta:
        model = BenchSession
        fields = ("id", "created", "config_path", "methods", "repeats", "output_dir", "completed")
        export_order = fields
