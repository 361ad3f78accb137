from django.apps import AppConfig


class GrothendieckConfig(AppConfig):
    name = 'grothendieck'
    verbose_name = 'Grothendieck embedding degrees'
