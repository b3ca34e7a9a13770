from ._base import ReportCommand


class Command(ReportCommand):
    help = 'Emite la tabla de caracteres de S_d (Murnaghan-Nakayama) y su validación'
    command_name = 'table'
