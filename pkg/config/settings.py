from pathlib import Path
import os

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Only used by Django internals; nothing here is served or signed.
SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'django-insecure-jacobian-toolkit')

DEBUG = os.getenv('DJANGO_DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []

# Application definition
INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'rest_framework',

    # Project apps
    'apps.exactla',
    'apps.multipoly',
    'apps.jacobian',
    'apps.lefschetz',
    'apps.sectionmap',
    'apps.cli',
]

# Django refuses to boot without a database entry. Nothing is persisted.
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}

USE_TZ = True
TIME_ZONE = 'UTC'

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# -----------------------
# Logging
# -----------------------
LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'apps': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}

# -----------------------
# Toolkit configuration
# -----------------------
TOOL_VERSION = '1.0.0'

# Random coefficients over Q are uniform integers in [-B, B]
RANDOM_COEFFICIENT_BOUND = int(os.getenv('RANDOM_COEFFICIENT_BOUND', 9))

# How many samples to draw when looking for a "general" object (smooth form,
# hyperplane with smooth section) before giving up
GENERIC_TRIAL_BUDGET = int(os.getenv('GENERIC_TRIAL_BUDGET', 20))

# Weak Lefschetz witness search
WLP_DEFAULT_TRIALS = int(os.getenv('WLP_DEFAULT_TRIALS', 20))
# Exhaustive enumeration is refused when p^(n+1) exceeds this
WLP_ENUMERATION_BOUND = int(os.getenv('WLP_ENUMERATION_BOUND', 100000))

# Degree budget beyond the socle degree for the char | d smoothness sweep
SMOOTHNESS_EXTRA_DEGREES = int(os.getenv('SMOOTHNESS_EXTRA_DEGREES', 4))
# Rank certificate prime for rational inputs; must stay below 2^31
SMOOTHNESS_CERTIFICATE_PRIME = int(os.getenv('SMOOTHNESS_CERTIFICATE_PRIME', 2147483647))

CONTRACTED_LINE_PARAMETERS = (0, 1, 2, 3)

# Probe harness
PROBE_MAX_RING_DIMENSION = int(os.getenv('PROBE_MAX_RING_DIMENSION', 2000))
PROBE_USE_WORKERS = os.getenv('PROBE_USE_WORKERS', 'False') == 'True'

# Celery configuration
CELERY_BROKER_URL = os.getenv('CELERY_BROKER_URL', os.getenv('REDIS_URL', 'redis://redis:6379/0'))
CELERY_RESULT_BACKEND = os.getenv('CELERY_RESULT_BACKEND', CELERY_BROKER_URL)
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
