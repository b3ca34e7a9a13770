"""
Excepciones propias del proyecto.

Los errores de dominio usan ``django.core.exceptions.ValidationError``;
aquí solo vive el error que señala un fallo de implementación.
"""


class InternalConsistencyError(RuntimeError):
    """Un resultado calculado no pasó su propia verificación."""
