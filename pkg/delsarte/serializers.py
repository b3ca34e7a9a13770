"""
Serializers de θ y del sistema de Delsarte.

Los racionales se exportan como {"num": "...", "den": "..."} para no perder
precisión.
"""

from fractions import Fraction

from rest_framework import serializers

from symmetric.serializers import PartitionField


class RationalField(serializers.Field):
    """Racional exacto como {"num": cadena, "den": cadena}."""

    def to_representation(self, value):
        value = Fraction(value)
        return {'num': str(value.numerator), 'den': str(value.denominator)}

    def to_internal_value(self, data):
        try:
            return Fraction(int(data['num']), int(data['den']))
        except (KeyError, TypeError, ValueError, ZeroDivisionError):
            raise serializers.ValidationError("Se esperaba {'num': ..., 'den': ...} con den != 0")


class ThetaEntrySerializer(serializers.Serializer):
    cycle_type = PartitionField()
    value = RationalField()

    def to_representation(self, instance):
        cycle_type, value = instance
        return super().to_representation({'cycle_type': cycle_type, 'value': value})


class ThetaVectorSerializer(serializers.Serializer):
    d = serializers.IntegerField()
    has_duplicates = serializers.BooleanField()
    entries = ThetaEntrySerializer(many=True)


class ConstraintRowSerializer(serializers.Serializer):
    name = serializers.CharField()
    kind = serializers.CharField()
    coefficients = serializers.ListField(child=RationalField())
    sense = serializers.CharField()
    rhs = RationalField()


class DelsarteSystemSerializer(serializers.Serializer):
    """Exporta {variables, equalities, inequalities} más el contexto del sistema."""

    d = serializers.IntegerField()
    identity_value = serializers.IntegerField()
    even_constraints = serializers.BooleanField()
    variables = serializers.ListField(child=PartitionField())
    equalities = ConstraintRowSerializer(many=True)
    inequalities = ConstraintRowSerializer(many=True, source='character_inequalities')


class ViolationSerializer(serializers.Serializer):
    constraint = serializers.CharField()
    kind = serializers.CharField()
    residual = RationalField()
    detail = serializers.CharField(allow_blank=True)
