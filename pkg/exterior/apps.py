from django.apps import AppConfig


class ExteriorConfig(AppConfig):
    name = 'exterior'
    verbose_name = 'Alternating forms on H1'
