from dataclasses import replace

from ._base import ReportCommand


class Command(ReportCommand):
    help = 'Certifica (o no) la inexistencia de un plano proyectivo de orden d'
    command_name = 'certify'
    supports_even_check = True

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--save',
            action='store_true',
            help='Archiva el certificado en la base de datos',
        )

    def build_config(self, options):
        return replace(super().build_config(options), save=options['save'])
