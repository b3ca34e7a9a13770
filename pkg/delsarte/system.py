"""
Sistema lineal de Delsarte sobre θ_B para un orden d.

Igualdades: θ(e) = (d-1)d se fija como constante; la suma sobre las clases
sin puntos fijos (C_0) vale (d-1)²d y la suma sobre las clases con un punto
fijo (C_1) vale (d-2)(d-1)d². Desigualdades: no negatividad de cada
variable y, para cada carácter irreducible χ,
χ(e)(d-1)d + Σ_C χ|_C θ_C ≥ 0.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from django.core.exceptions import ValidationError

from characters.tables import character_table
from symmetric.partitions import Partition, enumerate_partitions

from .theta import ThetaVector

logger = logging.getLogger(__name__)

EQUALITY = 'equality'
NONNEGATIVITY = 'nonnegativity'
CHARACTER = 'character'


@dataclass(frozen=True)
class ConstraintRow:
    """Fila a·θ (== | >=) rhs sobre las variables del sistema."""

    name: str
    kind: str
    coefficients: Tuple[Fraction, ...]
    sense: str
    rhs: Fraction
    irrep: Optional[Partition] = None

    def lhs(self, values: Sequence[Fraction]) -> Fraction:
        return sum((a * x for a, x in zip(self.coefficients, values)), Fraction(0))

    def residual(self, values: Sequence[Fraction]) -> Fraction:
        return self.lhs(values) - self.rhs

    def is_satisfied(self, values: Sequence[Fraction]) -> bool:
        residual = self.residual(values)
        return residual == 0 if self.sense == '==' else residual >= 0


@dataclass(frozen=True)
class Violation:
    """Restricción violada con su residuo exacto (lhs - rhs)."""

    constraint: str
    kind: str
    residual: Fraction
    detail: str = ''


@dataclass(frozen=True)
class DelsarteSystem:
    d: int
    variables: Tuple[Partition, ...]
    identity_value: int
    equalities: Tuple[ConstraintRow, ...]
    inequalities: Tuple[ConstraintRow, ...]
    even_constraints: bool = False
    metadata: Dict[str, bool] = field(default_factory=dict, compare=False)

    @property
    def character_inequalities(self) -> Tuple[ConstraintRow, ...]:
        return tuple(row for row in self.inequalities if row.kind == CHARACTER)

    @property
    def nonnegativity_inequalities(self) -> Tuple[ConstraintRow, ...]:
        return tuple(row for row in self.inequalities if row.kind == NONNEGATIVITY)

    def index(self, cycle_type: Partition) -> int:
        return self.variables.index(cycle_type)

    def values_of(self, theta: ThetaVector) -> Tuple[Fraction, ...]:
        return tuple(theta.get(c) for c in self.variables)

    def theta_from_values(self, values: Sequence[Fraction]) -> ThetaVector:
        mapping = {Partition.identity(self.d): Fraction(self.identity_value)}
        mapping.update(zip(self.variables, values))
        return ThetaVector.from_mapping(self.d, mapping)

    def to_lp_text(self) -> str:
        """Formato LP legible: una restricción por línea."""
        names = [f"t{c}" for c in self.variables]
        lines = [f"\\ Delsarte system for S_{self.d}, theta(e) = {self.identity_value}"]
        lines.append('variables: ' + ' '.join(names))
        lines.append('subject to')
        for row in self.equalities + self.character_inequalities:
            terms = ' '.join(
                f"{'+' if a >= 0 else '-'} {abs(a)} {name}"
                for a, name in zip(row.coefficients, names)
                if a != 0
            ) or '0'
            lines.append(f" {row.name}: {terms} {'=' if row.sense == '==' else '>='} {row.rhs}")
        lines.append('bounds')
        lines.extend(f" {name} >= 0" for name in names)
        if self.even_constraints:
            lines.append('\\ post-hoc: every variable is an even integer')
        lines.append('end')
        return '\n'.join(lines) + '\n'


def supported_classes(d: int) -> Tuple[Partition, ...]:
    """
    Clases donde θ_B puede ser no nulo: e, luego C_0, luego C_1.

    Raises:
        ValidationError: Si d < 2
    """
    if not isinstance(d, int) or d < 2:
        raise ValidationError(f"supported_classes: d debe ser al menos 2, se recibió {d!r}")
    partitions = enumerate_partitions(d)
    fixed_point_free = [p for p in partitions if p.fixed_points() == 0]
    one_fixed_point = [p for p in partitions if p.fixed_points() == 1]
    return (Partition.identity(d),) + tuple(fixed_point_free) + tuple(one_fixed_point)


def equality_constants(d: int) -> Tuple[int, int, int]:
    """(θ(e), Σ_{C_0} θ, Σ_{C_1} θ) para un plano afín de orden d."""
    return (d - 1) * d, (d - 1) ** 2 * d, (d - 2) * (d - 1) * d ** 2


def build_system(d: int, even_constraints: bool = False) -> DelsarteSystem:
    """
    Arma las igualdades y desigualdades del esquema para el orden d.

    Args:
        d: Orden del plano
        even_constraints: Marca la condición de paridad, que se verifica a
            posteriori sobre las soluciones y no como fila lineal

    Returns:
        Sistema inmutable con las variables en orden canónico
    """
    classes = supported_classes(d)
    table = character_table(d)
    identity = classes[0]
    variables = classes[1:]
    identity_value, c0_total, c1_total = equality_constants(d)

    def indicator(fixed_points: int) -> Tuple[Fraction, ...]:
        return tuple(Fraction(1 if c.fixed_points() == fixed_points else 0) for c in variables)

    equalities = (
        ConstraintRow('C0_total', EQUALITY, indicator(0), '==', Fraction(c0_total)),
        ConstraintRow('C1_total', EQUALITY, indicator(1), '==', Fraction(c1_total)),
    )

    nonnegativity = tuple(
        ConstraintRow(
            f"nonneg{c}", NONNEGATIVITY,
            tuple(Fraction(1 if j == k else 0) for j in range(len(variables))),
            '>=', Fraction(0),
        )
        for k, c in enumerate(variables)
    )

    character_rows = tuple(
        ConstraintRow(
            f"chi{irrep}", CHARACTER,
            tuple(Fraction(v) for v in table.restricted_row(irrep, variables)),
            '>=', Fraction(-table.value(irrep, identity) * identity_value),
            irrep=irrep,
        )
        for irrep in table.irreps
    )

    system = DelsarteSystem(
        d=d,
        variables=variables,
        identity_value=identity_value,
        equalities=equalities,
        inequalities=nonnegativity + character_rows,
        even_constraints=even_constraints,
        metadata={'even_constraints': even_constraints},
    )
    logger.info(
        f"Sistema de Delsarte para d={d}: {len(variables)} variables, "
        f"{len(equalities)} igualdades, {len(character_rows)} desigualdades de caracteres"
    )
    return system


def evaluate_theta(theta: ThetaVector, system: DelsarteSystem) -> List[Violation]:
    """
    Lista cada restricción violada por θ con su residuo exacto.

    Una lista vacía significa que θ es factible. El soporte fuera de las
    clases admitidas se reporta como violación, no como error.

    Raises:
        ValidationError: Si θ y el sistema son de órdenes distintos
    """
    if theta.d != system.d:
        raise ValidationError(f"θ es de S_{theta.d} y el sistema de S_{system.d}")

    violations = []
    allowed = set(system.variables) | {Partition.identity(system.d)}
    for cycle_type, value in theta:
        if cycle_type not in allowed and value != 0:
            violations.append(Violation(
                f"support{cycle_type}", 'support', value,
                f"θ{cycle_type} = {value} en una clase con dos o más puntos fijos",
            ))

    identity_residual = theta.identity_entry - system.identity_value
    if identity_residual != 0:
        violations.append(Violation(
            'identity', EQUALITY, identity_residual,
            f"θ(e) = {theta.identity_entry}, se esperaba {system.identity_value}",
        ))

    values = system.values_of(theta)
    for row in system.equalities + system.inequalities:
        if not row.is_satisfied(values):
            violations.append(Violation(row.name, row.kind, row.residual(values)))

    if system.even_constraints:
        for cycle_type, value in zip(system.variables, values):
            if value.denominator != 1 or value.numerator % 2:
                violations.append(Violation(
                    f"even{cycle_type}", 'evenness', value,
                    f"θ{cycle_type} = {value} no es un entero par",
                ))
    return violations
