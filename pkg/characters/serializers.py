"""
Serializers y exportación CSV de tablas de caracteres.
"""

import csv
import io

from rest_framework import serializers

from symmetric.serializers import PartitionField


class CharacterTableSerializer(serializers.Serializer):
    """Refleja los campos de CharacterTable."""

    d = serializers.IntegerField()
    irreps = serializers.ListField(child=PartitionField())
    classes = serializers.ListField(child=PartitionField())
    values = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))


class CheckResultSerializer(serializers.Serializer):
    name = serializers.CharField()
    passed = serializers.BooleanField()
    detail = serializers.CharField(allow_blank=True)


class ValidationReportSerializer(serializers.Serializer):
    d = serializers.IntegerField()
    passed = serializers.BooleanField()
    checks = CheckResultSerializer(many=True)


def _label(partition) -> str:
    return str(partition)


def table_to_csv(table) -> str:
    """
    Primera fila: particiones de las clases; primera columna: particiones de
    los caracteres; cuerpo: enteros.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow([''] + [_label(c) for c in table.classes])
    for irrep, row in zip(table.irreps, table.values):
        writer.writerow([_label(irrep)] + list(row))
    return buffer.getvalue()
