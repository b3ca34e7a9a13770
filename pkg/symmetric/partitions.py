"""
Particiones enteras y clases de conjugación del grupo simétrico S_d.

Las particiones de d indexan a la vez las clases de conjugación (tipos de
ciclo) y los caracteres irreducibles de S_d. El orden canónico de todo el
proyecto es el lexicográfico inverso que produce ``enumerate_partitions``.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Tuple

from django.conf import settings
from django.core.exceptions import ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=False)
class Partition:
    """
    Partición de un entero positivo: partes positivas en orden no creciente.

    Dos particiones son iguales si y solo si sus listas de partes coinciden.
    """

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(not isinstance(p, int) or isinstance(p, bool) for p in parts):
            raise ValidationError(f"Las partes deben ser enteros: {list(parts)}")
        if any(p < 1 for p in parts):
            raise ValidationError(f"Las partes deben ser positivas: {list(parts)}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValidationError(f"Las partes deben ser no crecientes: {list(parts)}")
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def of(cls, parts: Sequence[int]) -> Partition:
        """Construye la partición ordenando las partes dadas."""
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def identity(cls, d: int) -> Partition:
        """Tipo de ciclo de la identidad de S_d: [1, ..., 1]."""
        return cls((1,) * d)

    @property
    def d(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def fixed_points(self) -> int:
        return self.parts.count(1)

    def is_identity(self) -> bool:
        return all(p == 1 for p in self.parts)

    def conjugate(self) -> Partition:
        """Partición transpuesta del diagrama de Young."""
        if not self.parts:
            return self
        return Partition(tuple(
            sum(1 for p in self.parts if p > j) for j in range(self.parts[0])
        ))

    def as_list(self):
        return list(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return '[' + ','.join(str(p) for p in self.parts) + ']'


@dataclass(frozen=True)
class ConjugacyClassInfo:
    """Datos derivados de una clase de conjugación de S_d."""

    cycle_type: Partition
    size: int
    fixed_points: int
    sign: int

    @property
    def d(self) -> int:
        return self.cycle_type.d


def _partitions_bounded(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


def _check_degree(d: int, upper: int, what: str) -> None:
    if not isinstance(d, int) or isinstance(d, bool) or d < 1 or d > upper:
        raise ValidationError(f"{what}: d debe estar entre 1 y {upper}, se recibió {d!r}")


@lru_cache(maxsize=None)
def _enumerate(d: int) -> Tuple[Partition, ...]:
    partitions = tuple(Partition(p) for p in _partitions_bounded(d, d))
    logger.debug(f"Enumeradas {len(partitions)} particiones de {d}")
    return partitions


def enumerate_partitions(d: int) -> Tuple[Partition, ...]:
    """
    Enumera todas las particiones de d en orden lexicográfico inverso.

    El orden empieza en [d] y termina en [1, ..., 1]; indexa filas y columnas
    de todas las matrices del proyecto.

    Raises:
        ValidationError: Si d está fuera de [1, MAX_PARTITION_DEGREE]
    """
    _check_degree(d, settings.MAX_PARTITION_DEGREE, "enumerate_partitions")
    return _enumerate(d)


def centralizer_order(cycle_type: Partition) -> int:
    """z_λ = Π i^{m_i} · m_i! sobre las multiplicidades de las partes."""
    z = 1
    for part, multiplicity in cycle_type.multiplicities().items():
        z *= part ** multiplicity * math.factorial(multiplicity)
    return z


def partition_sign(cycle_type: Partition) -> int:
    return -1 if (cycle_type.d - cycle_type.length) % 2 else 1


def class_info(cycle_type: Partition) -> ConjugacyClassInfo:
    """
    Calcula tamaño, puntos fijos y signo de la clase con el tipo de ciclo dado.

    Args:
        cycle_type: Partición de d

    Returns:
        Información de la clase, con aritmética entera exacta
    """
    size = math.factorial(cycle_type.d) // centralizer_order(cycle_type)
    return ConjugacyClassInfo(
        cycle_type=cycle_type,
        size=size,
        fixed_points=cycle_type.fixed_points(),
        sign=partition_sign(cycle_type),
    )


def class_listing(d: int) -> Tuple[ConjugacyClassInfo, ...]:
    return tuple(class_info(p) for p in enumerate_partitions(d))


def forbidden_set_size(d: int) -> int:
    """Cantidad de permutaciones de S_d con dos o más puntos fijos."""
    return sum(info.size for info in class_listing(d) if info.fixed_points >= 2)
