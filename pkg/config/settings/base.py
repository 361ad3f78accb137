from pathlib import Path
# Config is used to access the .env values
# Csv is used to convert the values from .env as as list
from decouple import config, Csv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent


# The project never serves HTTP, the key is only needed because Django insists on one.
SECRET_KEY = config('SECRET_KEY', default='quotvol-local-only-secret-key')

DEBUG = config('DEBUG', default=True, cast=bool)

ALLOWED_HOSTS = config('ALLOWED_HOSTS', default='', cast=Csv())


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    # Third party apps
    # rest_framework is used for validating the job documents (serializers)
    # and for parsing/rendering the JSON documents
    'rest_framework',

    # Local apps
    'scalars',
    'exterior',
    'abelian',
    'localization',
    'grothendieck',
    'jobs',
]

# No persistence: every job is computed from its input document
DATABASES = {}

# Internationalization
LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

REST_FRAMEWORK = {
    # Keeps the 𝔱 symbol readable inside the rendered documents
    'UNICODE_JSON': True,
    # Short separators keep indented documents free of trailing whitespace
    'COMPACT_JSON': True,
    'UNAUTHENTICATED_USER': None,
}

# Library knobs, read by the localization engine and the jobs app.
# The pure algebra apps (scalars, exterior, abelian) never look at these.
QUOTVOL = {
    'SCHEMA_VERSION': 1,
    # Number of threads used for evaluating fixed point components and sweep rows
    # 1 means everything runs sequentially
    'MAX_WORKERS': config('QUOTVOL_MAX_WORKERS', default=1, cast=int),
    # Seed for the random rational weight candidate of the weight independence check
    'WEIGHT_SEED': config('QUOTVOL_WEIGHT_SEED', default=20240517, cast=int),
    'RANDOM_WEIGHT_BOUND': 40,
    'DEFAULT_FORMAT': config('QUOTVOL_DEFAULT_FORMAT', default='json'),
}

LOG_LEVEL = config('QUOTVOL_LOG_LEVEL', default='WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        # Standard output is reserved for the result documents
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        }
        for app in ('scalars', 'exterior', 'abelian', 'localization', 'grothendieck', 'jobs')
    },
}
