# Settings used for batch runs (sweeps, verification grids)
from .base import *  # noqa: F401,F403

DEBUG = False

# Only geometric validity warnings and errors reach stderr
for _logger in LOGGING['loggers'].values():  # noqa: F405
    _logger['level'] = config('QUOTVOL_LOG_LEVEL', default='WARNING')  # noqa: F405
