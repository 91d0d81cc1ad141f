from django.apps import AppConfig


class MultipolyConfig(AppConfig):
    name = 'apps.multipoly'
    verbose_name = 'Homogeneous polynomials'
