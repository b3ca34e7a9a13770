"""
Modelos para archivar certificados de (no) existencia.

Cada ejecución de ``certify --save`` guarda el reporte JSON completo y la
transcripción legible, para poder comparar corridas de distintos órdenes.
"""

import uuid

from django.db import models
from django.utils.translation import gettext_lazy as _


class CertificateRecord(models.Model):
    """
    Certificado archivado para un orden d.
    """

    OUTCOME_CHOICES = [
        ('refuted', _("Refutado")),
        ('inconclusive', _("No concluyente")),
    ]

    id = models.UUIDField(
        primary_key=True,
        default=uuid.uuid4,
        editable=False,
        help_text="Identificador único del certificado"
    )

    order = models.PositiveSmallIntegerField(
        verbose_name=_("Orden"),
        help_text="Orden d del plano proyectivo examinado"
    )

    outcome = models.CharField(
        max_length=12,
        choices=OUTCOME_CHOICES,
        verbose_name=_("Resultado"),
        help_text="Resultado del certificado"
    )

    schema_version = models.CharField(
        max_length=10,
        verbose_name=_("Versión del esquema"),
        help_text="Versión del esquema JSON del reporte"
    )

    report = models.JSONField(
        default=dict,
        verbose_name=_("Reporte"),
        help_text="Reporte de refutación serializado"
    )

    transcript = models.TextField(
        blank=True,
        verbose_name=_("Transcripción"),
        help_text="Transcripción paso a paso del certificado"
    )

    created_at = models.DateTimeField(
        auto_now_add=True,
        verbose_name=_("Fecha de creación")
    )

    class Meta:
        verbose_name = _("Certificado")
        verbose_name_plural = _("Certificados")
        ordering = ['-created_at']
        indexes = [
            models.Index(fields=['order'], name='refutation_order_idx'),
            models.Index(fields=['outcome'], name='refutation_outcome_idx'),
        ]

    def __str__(self):
        return f"d={self.order}: {self.get_outcome_display()}"

    def is_refuted(self):
        """Indica si el certificado descarta la existencia del plano."""
        return self.outcome == 'refuted'
