"""
Serializers del reporte de factibilidad.
"""

from rest_framework import serializers

from delsarte.serializers import RationalField, ThetaVectorSerializer
from symmetric.serializers import PartitionField


class IntervalSerializer(serializers.Serializer):
    cycle_type = PartitionField()
    min = RationalField(source='lower', allow_null=True)
    max = RationalField(source='upper', allow_null=True)
    degenerate = serializers.BooleanField()

    def to_representation(self, instance):
        cycle_type, interval = instance
        data = {
            'cycle_type': cycle_type,
            'lower': interval.lower,
            'upper': interval.upper,
            'degenerate': interval.degenerate,
        }
        return super().to_representation(data)


class SizeBoundSerializer(serializers.Serializer):
    d = serializers.IntegerField()
    value = RationalField()
    plane_size = serializers.IntegerField()
    excludes_plane = serializers.BooleanField()
    maximizer = ThetaVectorSerializer()


class FeasibilityReportSerializer(serializers.Serializer):
    d = serializers.IntegerField()
    status = serializers.CharField()
    unique = serializers.BooleanField(allow_null=True)
    witness = ThetaVectorSerializer(allow_null=True)
    bounds = IntervalSerializer(many=True)
    infeasibility = RationalField()
    pivots = serializers.IntegerField()
    size_bound = SizeBoundSerializer(allow_null=True)
