from django.apps import AppConfig


class LefschetzConfig(AppConfig):
    name = 'apps.lefschetz'
    verbose_name = 'Weak Lefschetz tests'
