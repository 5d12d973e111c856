from django.apps import AppConfig


class RunsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "active_testing.runs"
    verbose_name = "Falsification runs"
