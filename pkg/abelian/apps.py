from django.apps import AppConfig


class AbelianConfig(AppConfig):
    name = 'abelian'
    verbose_name = 'Abelian Quot space volumes'
