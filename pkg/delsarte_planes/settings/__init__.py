# Configuración de desarrollo por defecto
from .development import *
