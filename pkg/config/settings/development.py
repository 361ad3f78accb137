# Settings used while working on the library locally
from .base import *  # noqa: F401,F403

DEBUG = True

LOG_LEVEL = config('QUOTVOL_LOG_LEVEL', default='INFO')  # noqa: F405

for _logger in LOGGING['loggers'].values():  # noqa: F405
    _logger['level'] = LOG_LEVEL
