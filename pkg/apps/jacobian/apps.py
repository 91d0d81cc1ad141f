from django.apps import AppConfig


class JacobianConfig(AppConfig):
    name = 'apps.jacobian'
    verbose_name = 'Jacobian rings'
