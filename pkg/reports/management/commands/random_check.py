from dataclasses import replace

from ._base import ReportCommand


class Command(ReportCommand):
    help = 'Verifica la Proposición sobre subconjuntos aleatorios de S_d'
    command_name = 'random_check'

    def add_command_arguments(self, parser):
        parser.add_argument('n', type=int, help='Tamaño de cada subconjunto')
        parser.add_argument('--seed', type=int, default=None, help='Semilla (DEFAULT_RANDOM_SEED por defecto)')
        parser.add_argument('--trials', type=int, default=None, help='Ensayos (RANDOM_CHECK_TRIALS por defecto)')

    def build_config(self, options):
        return replace(
            super().build_config(options),
            size=options['n'],
            seed=options['seed'],
            trials=options['trials'],
        )
