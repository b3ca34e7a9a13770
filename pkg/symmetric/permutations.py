"""
Aritmética explícita de permutaciones de {0, ..., d-1}.

``compose(p, q)`` es la composición de funciones p ∘ q, de modo que
``difference(p, q) = p⁻¹ ∘ q`` tiene un punto fijo en x exactamente cuando
p(x) = q(x), es decir cuando las rectas codificadas por p y q se cortan en x.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from django.core.exceptions import ValidationError

from .partitions import Partition


@dataclass(frozen=True)
class Permutation:
    """Biyección de {0, ..., d-1} dada por la lista de imágenes."""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValidationError(f"No es una permutación de 0..{len(images) - 1}: {list(images)}")
        object.__setattr__(self, 'images', images)

    @classmethod
    def identity(cls, d: int) -> Permutation:
        return cls(tuple(range(d)))

    @classmethod
    def from_cycles(cls, d: int, cycles: Sequence[Sequence[int]]) -> Permutation:
        """Construye la permutación a partir de ciclos disjuntos, p.ej. [(0, 1)]."""
        images = list(range(d))
        for cycle in cycles:
            for position, element in enumerate(cycle):
                images[element] = cycle[(position + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def d(self) -> int:
        return len(self.images)

    def cycles(self) -> Tuple[Tuple[int, ...], ...]:
        seen = set()
        cycles = []
        for start in range(self.d):
            if start in seen:
                continue
            cycle = []
            x = start
            while x not in seen:
                seen.add(x)
                cycle.append(x)
                x = self.images[x]
            cycles.append(tuple(cycle))
        return tuple(cycles)

    def cycle_type(self) -> Partition:
        return Partition.of(len(c) for c in self.cycles())

    def fixed_points(self) -> int:
        return sum(1 for i, image in enumerate(self.images) if i == image)

    def sign(self) -> int:
        return -1 if (self.d - len(self.cycles())) % 2 else 1

    def inversions(self) -> int:
        return sum(
            1
            for i in range(self.d)
            for j in range(i + 1, self.d)
            if self.images[i] > self.images[j]
        )


def _check_same_degree(p: Permutation, q: Permutation) -> None:
    if p.d != q.d:
        raise ValidationError(f"Grados distintos: {p.d} y {q.d}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Composición p ∘ q: x ↦ p(q(x))."""
    _check_same_degree(p, q)
    return Permutation(tuple(p.images[x] for x in q.images))


def invert(p: Permutation) -> Permutation:
    inverse = [0] * p.d
    for x, image in enumerate(p.images):
        inverse[image] = x
    return Permutation(tuple(inverse))


def difference(p: Permutation, q: Permutation) -> Permutation:
    """Diferencia p⁻¹ q entre dos elementos del subconjunto."""
    return compose(invert(p), q)
