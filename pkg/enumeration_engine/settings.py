"""
Django settings for the enumeration_engine project.

The project has no web surface and no database tables; Django provides the
settings layer, the management-command front end and app discovery.

Engine knobs are read from the environment with python-decouple and grouped
in ``ENUMERATION_CONFIG``.
"""
import os
from pathlib import Path
from decouple import config


# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = config('SECRET_KEY', default='enumeration-engine-local')
DEBUG = config('DEBUG', default=False, cast=bool)
ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    # Third-party apps
    'rest_framework',

    # Local apps
    'apps.sequences',
    'apps.exact',
    'apps.saddle',
    'apps.asymptotics',
    'apps.diagnostics',
]

# Nothing is persisted; computations are pure functions of their inputs.
DATABASES = {}

USE_I18N = False
USE_TZ = True
TIME_ZONE = 'UTC'

# REST Framework configuration (serializers and the JSON renderer only)
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
}

# Enumeration engine configuration
ENUMERATION_CONFIG = {
    'PRECISION_BITS': config('ENUMERATION_PRECISION_BITS', default=128, cast=int),
    'ORACLE_CAP': config('ENUMERATION_ORACLE_CAP', default=40, cast=int),
    'BISECTION_MAX_ITER': 200,
    'BRACKET_MAX_EXPANSIONS': 200,
    'NEWTON_MAX_ITER': 60,
    'SADDLE_TOLERANCE_MARGIN_BITS': 62,
    'RHO_RELATIVE_TOLERANCE': 1e-30,
    'RHO_MAX_SERIES_TERMS': 10_000,
    'POINT_PROB_SKIP_FACTOR': 0.3,
    'POINT_PROB_DEFICIT_LIMIT': 1e-20,
    'IDENTITY_ESCALATION_MARGIN_BITS': 20,
    'SERIES_TAIL_FACTOR': 0.25,
    'DIAGNOSTICS_TOLERANCE': config('ENUMERATION_DIAGNOSTICS_TOLERANCE', default=0.02, cast=float),
    'LIMIT_LAW_TOLERANCE': config('ENUMERATION_LIMIT_LAW_TOLERANCE', default=0.1, cast=float),
    'USE_WORKERS': config('ENUMERATION_USE_WORKERS', default=False, cast=bool),
}

# Celery Configuration (per-n saddle solves in diagnostics)
CELERY_BROKER_URL = config('REDIS_URL', default='redis://localhost:6379/0')
CELERY_RESULT_BACKEND = CELERY_BROKER_URL
CELERY_ACCEPT_CONTENT = ['json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_TIMEZONE = TIME_ZONE
CELERY_TASK_ALWAYS_EAGER = not ENUMERATION_CONFIG['USE_WORKERS']

# Logging
LOG_FILE = config('LOG_FILE', default='')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': config('LOG_LEVEL', default='WARNING'),
    },
}

if LOG_FILE:
    os.makedirs(os.path.dirname(os.path.abspath(LOG_FILE)), exist_ok=True)
    LOGGING['handlers']['file'] = {
        'class': 'logging.FileHandler',
        'filename': LOG_FILE,
        'formatter': 'verbose',
    }
    LOGGING['root']['handlers'].append('file')

# Sentry (Error tracking)
SENTRY_DSN = config('SENTRY_DSN', default='')

if SENTRY_DSN and not DEBUG:
    import sentry_sdk
    from sentry_sdk.integrations.django import DjangoIntegration

    sentry_sdk.init(
        dsn=SENTRY_DSN,
        integrations=[DjangoIntegration()],
        traces_sample_rate=0.0,
        send_default_pii=False,
    )
