from django.contrib import admin
from import_export.admin import ImportExportModelAdmin

from .models import BenchSession
from .models import FalsificationRun
from .resources import BenchSessionResource
from .resources import FalsificationRunResource


class FalsificationRunInline(admin.TabularInline):
    model = FalsificationRun
    fields = ("method", "seed", "worst_phi", "counterexample_count", "verified", "convergence_iteration")
    readonly_fields = fields
    extra = 0
    can_delete = False


@admin.register(FalsificationRun)
class FalsificationRunAdmin(ImportExportModelAdmin):
    resource_class = FalsificationRunResource
    list_display = ("method", "environment", "seed", "worst_phi", "counterexample_count", "verified", "created")
    list_filter = ("mode", "method", "environment", "falsified", "verified")
    search_fields = ("method", "environment", "specification", "report_path")
    readonly_fields = ("created", "modified")


@admin.register(BenchSession)
class BenchSessionAdmin(ImportExportModelAdmin):
    resource_class = BenchSessionResource
    list_display = ("config_path", "methods", "repeats", "completed", "created")
    list_filter = ("completed",)
    search_fields = ("config_path",)
    inlines = [FalsificationRunInline]
