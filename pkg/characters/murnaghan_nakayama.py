"""
Valores exactos de caracteres irreducibles de S_d.

La regla de Murnaghan-Nakayama se implementa con números beta: quitar un
gancho de borde de longitud r de μ equivale a mover una cuenta del conjunto
beta de b a b - r (posición libre), y la altura del gancho es la cantidad de
cuentas estrictamente entre b - r y b.
"""

import logging
import math
from functools import lru_cache
from typing import Iterator, Tuple

from django.core.exceptions import ValidationError

from symmetric.partitions import Partition

logger = logging.getLogger(__name__)


def _beta_set(parts: Tuple[int, ...]) -> Tuple[int, ...]:
    length = len(parts)
    return tuple(part + length - 1 - i for i, part in enumerate(parts))


def _from_beta_set(beta: Tuple[int, ...]) -> Tuple[int, ...]:
    ordered = sorted(beta, reverse=True)
    length = len(ordered)
    parts = tuple(b - (length - 1 - i) for i, b in enumerate(ordered))
    return tuple(p for p in parts if p > 0)


def rim_hooks(parts: Tuple[int, ...], length: int) -> Iterator[Tuple[Tuple[int, ...], int]]:
    """
    Enumera los ganchos de borde de longitud dada removibles de ``parts``.

    Yields:
        Pares (partición resultante, altura del gancho)
    """
    beta = _beta_set(parts)
    occupied = set(beta)
    for bead in beta:
        target = bead - length
        if target < 0 or target in occupied:
            continue
        height = sum(1 for other in beta if target < other < bead)
        remaining = tuple(target if b == bead else b for b in beta)
        yield _from_beta_set(remaining), height


@lru_cache(maxsize=None)
def _character(shape: Tuple[int, ...], cycle_type: Tuple[int, ...]) -> int:
    if not cycle_type:
        return 1
    # la parte más grande primero: menos ganchos por nivel
    first, rest = cycle_type[0], cycle_type[1:]
    value = 0
    for smaller, height in rim_hooks(shape, first):
        term = _character(smaller, rest)
        value += -term if height % 2 else term
    return value


def mn_character(irrep: Partition, cycle_type: Partition) -> int:
    """
    Valor del carácter irreducible χ_μ en la clase de tipo de ciclo λ.

    Args:
        irrep: Partición μ que indexa el carácter
        cycle_type: Partición λ que indexa la clase

    Returns:
        Entero exacto χ_μ(λ)

    Raises:
        ValidationError: Si μ y λ no son particiones del mismo d
    """
    if irrep.d != cycle_type.d:
        raise ValidationError(f"Particiones de tamaños distintos: {irrep} y {cycle_type}")
    return _character(irrep.parts, cycle_type.parts)


def cache_size() -> int:
    return _character.cache_info().currsize


def hook_lengths(irrep: Partition) -> Iterator[int]:
    conjugate = irrep.conjugate().parts
    for i, row in enumerate(irrep.parts):
        for j in range(row):
            yield row - j + conjugate[j] - i - 1


def irrep_dimension(irrep: Partition) -> int:
    """Dimensión de la representación irreducible por la fórmula de ganchos."""
    hooks = math.prod(hook_lengths(irrep))
    dimension, remainder = divmod(math.factorial(irrep.d), hooks)
    assert remainder == 0
    return dimension
