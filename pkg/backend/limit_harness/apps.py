from django.apps import AppConfig


class LimitHarnessConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "limit_harness"
    verbose_name = "Нерелятивистский предел"
