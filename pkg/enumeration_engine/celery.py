import os
from celery import Celery

# Set the default Django settings module for the 'celery' program.
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'enumeration_engine.settings')

app = Celery('enumeration_engine')

# Configuration keys carry a `CELERY_` prefix in settings.
app.config_from_object('django.conf:settings', namespace='CELERY')

# Picks up apps/diagnostics/tasks.py.
app.autodiscover_tasks()
