"""
Serializers del oráculo de planos.
"""

from rest_framework import serializers

from delsarte.serializers import RationalField
from symmetric.serializers import PartitionField, PermutationField


class AffineLineSetSerializer(serializers.Serializer):
    """Las rectas como lista de arreglos de imágenes."""

    d = serializers.IntegerField()
    lines = serializers.ListField(child=PermutationField())


class ScalarProductSerializer(serializers.Serializer):
    irrep = PartitionField()
    value = RationalField()
