from django.apps import AppConfig


class ExactlaConfig(AppConfig):
    name = 'apps.exactla'
    verbose_name = 'Exact linear algebra'
