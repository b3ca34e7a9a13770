"""
Oráculo de planos afines: construcción explícita, cálculo de θ_B por fuerza
bruta y verificación de la proposición de no negatividad.

Una recta no vertical ni horizontal del plano afín sobre GF(q) es la gráfica
de x ↦ m·x + b con m ≠ 0, es decir una permutación de los q puntos del eje.
"""

import logging
import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from django.conf import settings
from django.core.exceptions import ValidationError

from characters.tables import CharacterTable
from delsarte.theta import ThetaVector
from delsarte_planes.exceptions import InternalConsistencyError
from symmetric.partitions import Partition
from symmetric.permutations import Permutation, difference

from .fields import finite_field

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AffineLineSet:
    """
    Las (d-1)d rectas de pendiente no nula, ordenadas por (m, b).

    Las rectas de un mismo bloque de d consecutivas son paralelas entre sí.
    """

    d: int
    lines: Tuple[Permutation, ...]

    def parallel_classes(self) -> Tuple[Tuple[Permutation, ...], ...]:
        return tuple(
            self.lines[start:start + self.d] for start in range(0, len(self.lines), self.d)
        )


def _verify_line_set(line_set: AffineLineSet) -> None:
    d = line_set.d
    if len(line_set.lines) != (d - 1) * d:
        raise InternalConsistencyError(f"Se esperaban {(d - 1) * d} rectas, hay {len(line_set.lines)}")
    classes = line_set.parallel_classes()
    class_of = {line: k for k, group in enumerate(classes) for line in group}
    for p in line_set.lines:
        for q in line_set.lines:
            if p == q:
                continue
            fixed = difference(p, q).fixed_points()
            expected = 0 if class_of[p] == class_of[q] else 1
            if fixed != expected:
                raise InternalConsistencyError(
                    f"Rectas {p.images} y {q.images}: {fixed} puntos en común, se esperaba {expected}"
                )


def build_plane(q: int) -> AffineLineSet:
    """
    Codifica el plano afín sobre GF(q) como (q-1)q permutaciones.

    Raises:
        ValidationError: Si q no es un orden de cuerpo soportado
    """
    field = finite_field(q)
    lines = tuple(
        Permutation(tuple(field.add(field.mul(m, x), b) for x in field.elements))
        for m in range(1, q)
        for b in field.elements
    )
    line_set = AffineLineSet(d=q, lines=lines)
    _verify_line_set(line_set)
    logger.info(f"Plano afín de orden {q} construido: {len(lines)} rectas en {q - 1} clases paralelas")
    return line_set


def theta_of_subset(subset: Sequence[Permutation]) -> ThetaVector:
    """
    Cuenta los |B|² pares ordenados (j, m) según el tipo de ciclo de b_j⁻¹ b_m.

    Los elementos repetidos se cuentan según la definición y se marcan.

    Raises:
        ValidationError: Si B está vacío o mezcla grados
    """
    if not subset:
        raise ValidationError("El subconjunto B no puede estar vacío")
    degrees = {p.d for p in subset}
    if len(degrees) != 1:
        raise ValidationError(f"Los elementos de B tienen grados distintos: {sorted(degrees)}")
    d = degrees.pop()

    has_duplicates = len(set(subset)) != len(subset)
    if has_duplicates:
        logger.warning(f"B contiene elementos repetidos ({len(subset) - len(set(subset))})")

    counts = Counter(difference(p, q).cycle_type() for p in subset for q in subset)
    return ThetaVector.from_mapping(d, counts, has_duplicates=has_duplicates)


@dataclass(frozen=True)
class ScalarProduct:
    """S_χ = Σ_C χ|_C θ|_C = Tr(X*X) para la representación de χ."""

    irrep: Partition
    value: Fraction


def proposition_check(theta: ThetaVector, table: CharacterTable) -> List[ScalarProduct]:
    """
    Calcula S_χ para cada carácter irreducible; todos son >= 0 para un θ_B genuino.

    Raises:
        ValidationError: Si θ y la tabla son de órdenes distintos
    """
    if theta.d != table.d:
        raise ValidationError(f"θ es de S_{theta.d} y la tabla de S_{table.d}")
    return [
        ScalarProduct(
            irrep=irrep,
            value=sum((table.value(irrep, c) * value for c, value in theta), Fraction(0)),
        )
        for irrep in table.irreps
    ]


def _unrank(rank: int, d: int) -> Permutation:
    # código de Lehmer
    remaining = list(range(d))
    images = []
    for position in range(d, 0, -1):
        index, rank = divmod(rank, math.factorial(position - 1))
        images.append(remaining.pop(index))
    return Permutation(tuple(images))


def random_subset(d: int, n: int, seed: int) -> List[Permutation]:
    """
    n permutaciones distintas de grado d, uniformes y reproducibles con ``seed``.

    Raises:
        ValidationError: Si n > d! o d fuera de [1, MAX_RANDOM_DEGREE]
    """
    if d < 1 or d > settings.MAX_RANDOM_DEGREE:
        raise ValidationError(f"random_subset: d debe estar entre 1 y {settings.MAX_RANDOM_DEGREE}")
    order = math.factorial(d)
    if n < 0 or n > order:
        raise ValidationError(f"No hay {n} permutaciones distintas en S_{d} (|S_{d}| = {order})")
    rng = random.Random(seed)
    return [_unrank(rank, d) for rank in rng.sample(range(order), n)]
