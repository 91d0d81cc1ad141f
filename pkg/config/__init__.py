# The probe harness dispatches samples through this app when workers are on;
# the commands still work without celery installed.
try:
    from .celery import app as celery_app  # noqa
except ImportError:
    celery_app = None

__all__ = ['celery_app']
