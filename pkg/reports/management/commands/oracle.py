from ._base import ReportCommand


class Command(ReportCommand):
    help = 'Construye el plano afín de orden q y verifica θ contra su sistema'
    command_name = 'oracle'
    order_label = 'q'
    order_help = 'Potencia de primo q <= 9'
    supports_even_check = True
