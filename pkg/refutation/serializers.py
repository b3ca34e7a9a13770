"""
Serializers de los reportes de refutación.
"""

from rest_framework import serializers

from delsarte.serializers import ThetaVectorSerializer
from rational_lp.serializers import FeasibilityReportSerializer

from .models import CertificateRecord


class RefutationReasonSerializer(serializers.Serializer):
    kind = serializers.CharField()
    message = serializers.CharField()
    evidence = serializers.JSONField()


class RefutationReportSerializer(serializers.Serializer):
    d = serializers.IntegerField()
    outcome = serializers.CharField()
    reasons = RefutationReasonSerializer(many=True)
    theta_examined = ThetaVectorSerializer(allow_null=True)
    feasibility = FeasibilityReportSerializer(allow_null=True)
    transcript = serializers.ListField(child=serializers.CharField(allow_blank=True))


class CertificateRecordSerializer(serializers.ModelSerializer):
    """Serializer para el modelo CertificateRecord."""

    outcome_display = serializers.CharField(source='get_outcome_display', read_only=True)

    class Meta:
        model = CertificateRecord
        fields = [
            'id', 'order', 'outcome', 'outcome_display', 'schema_version',
            'report', 'transcript', 'created_at'
        ]
        read_only_fields = ['id', 'created_at']
