# Generated by Django 4.2.7 on 2026-10-18 10:12

from django.db import migrations, models
import uuid


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='CertificateRecord',
            fields=[
                ('id', models.UUIDField(default=uuid.uuid4, editable=False, help_text='Identificador único del certificado', primary_key=True, serialize=False)),
                ('order', models.PositiveSmallIntegerField(help_text='Orden d del plano proyectivo examinado', verbose_name='Orden')),
                ('outcome', models.CharField(choices=[('refuted', 'Refutado'), ('inconclusive', 'No concluyente')], help_text='Resultado del certificado', max_length=12, verbose_name='Resultado')),
                ('schema_version', models.CharField(help_text='Versión del esquema JSON del reporte', max_length=10, verbose_name='Versión del esquema')),
                ('report', models.JSONField(default=dict, help_text='Reporte de refutación serializado', verbose_name='Reporte')),
                ('transcript', models.TextField(blank=True, help_text='Transcripción paso a paso del certificado', verbose_name='Transcripción')),
                ('created_at', models.DateTimeField(auto_now_add=True, verbose_name='Fecha de creación')),
            ],
            options={
                'verbose_name': 'Certificado',
                'verbose_name_plural': 'Certificados',
                'ordering': ['-created_at'],
                'indexes': [models.Index(fields=['order'], name='refutation_order_idx'), models.Index(fields=['outcome'], name='refutation_outcome_idx')],
            },
        ),
    ]
