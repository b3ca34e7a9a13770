"""
Comando base: argumentos comunes y traducción de estados de salida.
"""

from django.core.management.base import BaseCommand, CommandError

from reports.runner import FORMATS_BY_COMMAND, RunConfig, run


class ReportCommand(BaseCommand):
    """Envuelve ``reports.runner.run`` para un comando concreto."""

    command_name = None
    order_label = 'd'
    order_help = 'Orden d del grupo simétrico S_d'
    supports_even_check = False

    def add_arguments(self, parser):
        parser.add_argument('order', type=int, metavar=self.order_label, help=self.order_help)
        parser.add_argument(
            '--format',
            dest='output_format',
            choices=FORMATS_BY_COMMAND[self.command_name],
            default='json',
            help='Formato del reporte (json por defecto)',
        )
        parser.add_argument('--output', dest='output_path', help='Archivo de salida (stdout por defecto)')
        if self.supports_even_check:
            parser.add_argument(
                '--no-even-check',
                dest='even_check',
                action='store_false',
                help='Desactiva las restricciones de paridad de θ',
            )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def build_config(self, options) -> RunConfig:
        return RunConfig(
            command=self.command_name,
            order=options['order'],
            even_check=options.get('even_check', True),
            output_format=options['output_format'],
            output_path=options.get('output_path'),
        )

    def handle(self, *args, **options):
        result = run(self.build_config(options))
        if not result.ok:
            raise CommandError(result.artifact, returncode=result.exit_status)
        if not options.get('output_path'):
            self.stdout.write(result.artifact, ending='')
