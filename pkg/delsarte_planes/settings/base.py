# Configuración base de Django para el esquema de Delsarte sobre planos proyectivos finitos

from pathlib import Path
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SECRET_KEY', default='django-insecure-change-this-in-production')

DEBUG = config('DEBUG', default=True, cast=bool)

ALLOWED_HOSTS = []

# Application definition
DJANGO_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
]

THIRD_PARTY_APPS = [
    'rest_framework',
]

LOCAL_APPS = [
    'symmetric',
    'characters',
    'delsarte',
    'rational_lp',
    'refutation',
    'planes',
    'reports',
]

INSTALLED_APPS = DJANGO_APPS + THIRD_PARTY_APPS + LOCAL_APPS

# Database
# Solo se usa para archivar certificados (certify --save)
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / config('DB_NAME', default='db.sqlite3'),
    }
}

# Internationalization
LANGUAGE_CODE = 'es-es'
TIME_ZONE = 'America/Bogota'
USE_I18N = True
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Django REST Framework (solo serializers y renderers, sin API web)
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'UNICODE_JSON': True,
    'COMPACT_JSON': False,
}

# Límites del cálculo combinatorio
MAX_PARTITION_DEGREE = config('MAX_PARTITION_DEGREE', default=25, cast=int)
MAX_TABLE_DEGREE = config('MAX_TABLE_DEGREE', default=14, cast=int)
MAX_RANDOM_DEGREE = config('MAX_RANDOM_DEGREE', default=20, cast=int)

# Programación lineal exacta
LP_BOUND_WORKERS = config('LP_BOUND_WORKERS', default=1, cast=int)

# Prueba aleatoria de la proposición
DEFAULT_RANDOM_SEED = config('DEFAULT_RANDOM_SEED', default=1, cast=int)
RANDOM_CHECK_TRIALS = config('RANDOM_CHECK_TRIALS', default=200, cast=int)

# Reportes
REPORT_SCHEMA_VERSION = config('REPORT_SCHEMA_VERSION', default='1.0')

# Logging (a stderr; los reportes salen por stdout)
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
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'simple',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': 'WARNING',
            'propagate': False,
        },
        **{
            app: {
                'handlers': ['console'],
                'level': config('LOG_LEVEL', default='INFO'),
                'propagate': False,
            }
            for app in LOCAL_APPS
        },
    },
}
