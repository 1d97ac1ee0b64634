# backend/settings.py - Birecurrence Workbench Settings
import os
from pathlib import Path

from dotenv import load_dotenv

BASE_DIR = Path(__file__).resolve().parent.parent

load_dotenv(BASE_DIR / '.env')

SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'django-dev-key-birecurrence-workbench')
DEBUG = os.getenv('DJANGO_DEBUG', 'True') == 'True'
ALLOWED_HOSTS = ['localhost', '127.0.0.1']

INSTALLED_APPS = [
    'rest_framework',
    'apps.core',
    'apps.automata',
    'apps.monoid',
    'apps.birecurrence',
    'apps.codes',
    'apps.series',
    'apps.unambiguous',
]

# No persistence: every result is recomputed from the input files
DATABASES = {}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

# Default primary key field type
DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# REST Framework configuration (serializers and renderer only)
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'UNICODE_JSON': True,
    'COMPACT_JSON': False,
}

# Logging Configuration
LOG_LEVEL = os.getenv('BIREC_LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'file': {
            'level': 'INFO',
            'class': 'logging.FileHandler',
            'filename': BASE_DIR / 'birec.log',
            'formatter': 'verbose',
            'delay': True,
        },
        'console': {
            'level': LOG_LEVEL,
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': 'WARNING',
            'propagate': True,
        },
        'apps': {
            'handlers': ['file', 'console'],
            'level': 'INFO',
            'propagate': False,
        },
        'birec': {
            'handlers': ['file', 'console'],
            'level': 'INFO',
            'propagate': False,
        },
    },
}

# Workbench Specific Settings
BIREC_VERSION = '1.0.0'
BIREC_PROJECT_NAME = 'Birecurrence Workbench'

BIREC = {
    # Default length bound for coefficient-wise verifications
    'BOUND': int(os.getenv('BIREC_BOUND', '12')),
    # Maximum number of monoid elements enumerated before giving up
    'CAP': int(os.getenv('BIREC_CAP', '1000000')),
    'SEED': int(os.getenv('BIREC_SEED', '0x5EED'), 0),
    'CESARO_N': 400,
    'SPLIT_ATTEMPTS': 64,
    'CLASSIFY_MAX_STATES': 12,
    'WORKERS': int(os.getenv('BIREC_WORKERS', '4')),
    'CORPUS_DIR': BASE_DIR / 'corpus',
}
