"""
Conteos de paridad sobre θ.
"""

from fractions import Fraction
from typing import Tuple

from delsarte.theta import ThetaVector
from symmetric.partitions import class_info


def odd_difference_count(theta: ThetaVector) -> Fraction:
    """Σ de θ sobre las clases de signo -1."""
    return sum((value for c, value in theta if class_info(c).sign == -1), Fraction(0))


def sign_split_solutions(n: int, n_odd: Fraction) -> Tuple[int, ...]:
    """
    Todos los k en [0, n] con 2k(n-k) = N_odd.

    k es la cantidad de elementos pares de B; 2k(n-k) cuenta los pares
    ordenados de paridades opuestas.

    Returns:
        Tupla ordenada; vacía si N_odd no es entero o no es alcanzable
    """
    n_odd = Fraction(n_odd)
    if n_odd.denominator != 1:
        return ()
    return tuple(k for k in range(n + 1) if 2 * k * (n - k) == n_odd)
