from ._base import ReportCommand


class Command(ReportCommand):
    help = 'Resuelve el sistema con simplex exacto y reporta cotas por variable'
    command_name = 'solve'
    supports_even_check = True
