from django.apps import AppConfig


class ScalarsConfig(AppConfig):
    name = 'scalars'
    verbose_name = 'Exact scalars and truncated series'
