from django.apps import AppConfig


class ExactConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.exact'
    verbose_name = 'Exact Counting'
