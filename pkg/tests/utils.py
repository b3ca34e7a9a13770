"""
Datos compartidos por las pruebas.
"""

from delsarte.theta import ThetaVector
from symmetric.partitions import Partition

P = Partition


def order_six_witness(changes=None):
    """θ del punto único de d=6: x=150, a=450, b=270, el resto 0."""
    values = {
        P((1,) * 6): 30,
        P((3, 3)): 150,
        P((3, 2, 1)): 450,
        P((5, 1)): 270,
    }
    values.update({P(k): v for k, v in (changes or {}).items()})
    return ThetaVector.from_mapping(6, values)
