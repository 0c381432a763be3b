from django.apps import AppConfig


class SaddleConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.saddle'
    verbose_name = 'Saddle Point'
