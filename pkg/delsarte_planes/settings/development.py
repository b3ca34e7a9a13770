# Configuración de desarrollo

from .base import *

DEBUG = True

# Configuración de logging más detallada para desarrollo
LOGGING['loggers']['symmetric']['level'] = 'DEBUG'
LOGGING['loggers']['characters']['level'] = 'DEBUG'
LOGGING['loggers']['planes']['level'] = 'DEBUG'

# Los pivotes del simplex solo interesan al depurar
LOGGING['loggers']['rational_lp']['level'] = config('LP_LOG_LEVEL', default='INFO')
