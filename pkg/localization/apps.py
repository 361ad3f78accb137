from django.apps import AppConfig


class LocalizationConfig(AppConfig):
    name = 'localization'
    verbose_name = 'Fixed point volumes of twisted matrix divisors'
