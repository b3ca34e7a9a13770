"""
Serializers de la aplicación symmetric.

Las particiones se exportan como arreglos JSON de enteros y los tamaños de
clase como cadenas, porque d! excede la precisión nativa de JSON.
"""

from rest_framework import serializers

from .partitions import Partition


class PartitionField(serializers.Field):
    """Partición como arreglo JSON de enteros, p.ej. [3,2,1]."""

    def to_representation(self, value):
        return value.as_list()

    def to_internal_value(self, data):
        if not isinstance(data, list) or not all(isinstance(p, int) and not isinstance(p, bool) for p in data):
            raise serializers.ValidationError("Se esperaba un arreglo de enteros")
        if not data:
            raise serializers.ValidationError("La partición no puede ser vacía")
        try:
            return Partition(tuple(data))
        except Exception as e:
            raise serializers.ValidationError(str(e))


class BigIntegerStringField(serializers.Field):
    """Entero de precisión arbitraria serializado como cadena."""

    def to_representation(self, value):
        return str(value)

    def to_internal_value(self, data):
        try:
            return int(data)
        except (TypeError, ValueError):
            raise serializers.ValidationError("Se esperaba un entero")


class ConjugacyClassSerializer(serializers.Serializer):
    """Registro {cycle_type, size, fixed_points, sign} de una clase."""

    cycle_type = PartitionField()
    size = BigIntegerStringField()
    fixed_points = serializers.IntegerField()
    sign = serializers.IntegerField()


class PermutationField(serializers.Field):
    """Permutación como arreglo de imágenes."""

    def to_representation(self, value):
        return list(value.images)
