from django.apps import AppConfig


class JobsConfig(AppConfig):
    name = 'jobs'
    verbose_name = 'Batch jobs and result documents'
