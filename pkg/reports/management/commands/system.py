from ._base import ReportCommand


class Command(ReportCommand):
    help = 'Emite el sistema de Delsarte sobre θ para un plano de orden d'
    command_name = 'system'
    supports_even_check = True
