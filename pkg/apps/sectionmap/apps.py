from django.apps import AppConfig


class SectionmapConfig(AppConfig):
    name = 'apps.sectionmap'
    verbose_name = 'Hyperplane section maps'
