# Configuración de producción (corridas batch largas, p.ej. d=12)

from .base import *

DEBUG = False

SECRET_KEY = config('SECRET_KEY')

LOGGING['handlers']['console']['formatter'] = 'verbose'
for _app in LOCAL_APPS:
    LOGGING['loggers'][_app]['level'] = 'WARNING'
LOGGING['loggers']['refutation']['level'] = 'INFO'

LP_BOUND_WORKERS = config('LP_BOUND_WORKERS', default=4, cast=int)
