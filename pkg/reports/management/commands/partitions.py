from ._base import ReportCommand


class Command(ReportCommand):
    help = 'Lista las clases de conjugación de S_d con tamaño, puntos fijos y signo'
    command_name = 'partitions'
