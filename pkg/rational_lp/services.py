"""
Factibilidad, cotas por variable y unicidad del sistema de Delsarte.

Todo se resuelve con el simplex racional exacto de ``simplex.py``; no hay
ninguna fase en punto flotante.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import repeat
from typing import Optional, Tuple

from django.conf import settings
from django.core.exceptions import ValidationError

from delsarte.system import DelsarteSystem, evaluate_theta
from delsarte.theta import ThetaVector
from delsarte_planes.exceptions import InternalConsistencyError
from symmetric.partitions import Partition

from .simplex import UNBOUNDED, ZERO, SimplexTableau, StandardForm, optimize_column, phase_one

logger = logging.getLogger(__name__)

FEASIBLE = 'feasible'
INFEASIBLE = 'infeasible'


@dataclass(frozen=True)
class Interval:
    """[lower, upper] exacto; None indica un extremo no acotado."""

    lower: Optional[Fraction]
    upper: Optional[Fraction]

    @property
    def degenerate(self) -> bool:
        return self.lower is not None and self.lower == self.upper

    def contains(self, value: Fraction) -> bool:
        return (self.lower is None or self.lower <= value) and (self.upper is None or value <= self.upper)


@dataclass(frozen=True)
class SizeBound:
    """
    Cota de Delsarte para |B| cuando las diferencias evitan las clases con
    dos o más puntos fijos.

    ``maximizer`` es la función de clase normalizada (f(e) = 1) que alcanza
    la cota; ``value`` = Σ_C f_C sumando la identidad.
    """

    d: int
    value: Fraction
    maximizer: ThetaVector

    @property
    def plane_size(self) -> int:
        return (self.d - 1) * self.d

    @property
    def excludes_plane(self) -> bool:
        return self.value < self.plane_size


@dataclass(frozen=True)
class FeasibilityReport:
    """
    Resultado del solver: estado, testigo y, si se pidieron, cotas y unicidad.
    """

    d: int
    status: str
    witness: Optional[ThetaVector] = None
    bounds: Tuple[Tuple[Partition, Interval], ...] = ()
    unique: Optional[bool] = None
    infeasibility: Fraction = Fraction(0)
    pivots: int = 0
    size_bound: Optional[SizeBound] = None

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE

    def bound(self, cycle_type: Partition) -> Interval:
        return dict(self.bounds)[cycle_type]


def standard_form(system: DelsarteSystem) -> StandardForm:
    """
    Lleva el sistema a A x = b, x >= 0, b >= 0.

    Columnas: las variables θ en orden del sistema y una de exceso por cada
    desigualdad de caracteres (a·θ - s = rhs).
    """
    character_rows = system.character_inequalities
    n = len(system.variables)
    n_surplus = len(character_rows)
    matrix, rhs, names = [], [], []

    for row in system.equalities:
        matrix.append(list(row.coefficients) + [Fraction(0)] * n_surplus)
        rhs.append(row.rhs)
        names.append(row.name)

    for k, row in enumerate(character_rows):
        surplus = [Fraction(0)] * n_surplus
        surplus[k] = Fraction(-1)
        matrix.append(list(row.coefficients) + surplus)
        rhs.append(row.rhs)
        names.append(row.name)

    for i, value in enumerate(rhs):
        if value < 0:
            matrix[i] = [-a for a in matrix[i]]
            rhs[i] = -value

    return StandardForm(matrix=matrix, rhs=rhs, n_structural=n, row_names=names)


def _feasible_tableau(system: DelsarteSystem) -> Tuple[Optional[SimplexTableau], Fraction]:
    return phase_one(standard_form(system))


def _witness(system: DelsarteSystem, tableau: SimplexTableau) -> ThetaVector:
    values = tableau.values()[:len(system.variables)]
    witness = system.theta_from_values(values)
    # la paridad es una condición a posteriori, no parte del LP
    violations = [v for v in evaluate_theta(witness, system) if v.kind != 'evenness']
    if violations:
        logger.error(f"Testigo inválido para d={system.d}: {violations}")
        raise InternalConsistencyError(
            f"El testigo del simplex viola {len(violations)} restricciones para d={system.d}"
        )
    return witness


def solve_feasibility(system: DelsarteSystem) -> FeasibilityReport:
    """
    Decide la factibilidad exacta del sistema (fase 1 con regla de Bland).

    Returns:
        Reporte con estado y, si es factible, un testigo verificado
    """
    tableau, infeasibility = _feasible_tableau(system)
    if tableau is None:
        logger.info(f"Sistema de d={system.d} infactible (infactibilidad {infeasibility})")
        return FeasibilityReport(d=system.d, status=INFEASIBLE, infeasibility=infeasibility)
    witness = _witness(system, tableau)
    logger.info(f"Sistema de d={system.d} factible tras {tableau.pivots} pivotes")
    return FeasibilityReport(d=system.d, status=FEASIBLE, witness=witness, pivots=tableau.pivots)


def _bounds_from(system: DelsarteSystem, tableau: SimplexTableau, max_workers: int) -> Tuple[Tuple[Partition, Interval], ...]:
    tasks = [(k, maximize) for k in range(len(system.variables)) for maximize in (False, True)]
    columns = [k for k, _ in tasks]
    directions = [maximize for _, maximize in tasks]
    if max_workers > 1:
        with ProcessPoolExecutor(max_workers=max_workers) as executor:
            results = list(executor.map(optimize_column, repeat(tableau), columns, directions))
    else:
        results = list(map(optimize_column, repeat(tableau), columns, directions))
    bounds = tuple(
        (cycle_type, Interval(lower=results[2 * k], upper=results[2 * k + 1]))
        for k, cycle_type in enumerate(system.variables)
    )
    logger.info(f"Cotas de {len(system.variables)} variables calculadas para d={system.d}")
    return bounds


def variable_bounds(system: DelsarteSystem, max_workers: Optional[int] = None) -> Tuple[Tuple[Partition, Interval], ...]:
    """
    Mínimo y máximo exactos de cada variable sobre el poliedro factible.

    Raises:
        ValidationError: Si el sistema es infactible
    """
    tableau, _ = _feasible_tableau(system)
    if tableau is None:
        raise ValidationError(f"No hay cotas: el sistema de d={system.d} es infactible")
    return _bounds_from(system, tableau, max_workers or settings.LP_BOUND_WORKERS)


def _size_bound_form(system: DelsarteSystem) -> StandardForm:
    character_rows = system.character_inequalities
    n = len(system.variables)
    n_surplus = len(character_rows)
    matrix, rhs, names = [], [], []
    for k, row in enumerate(character_rows):
        surplus = [Fraction(0)] * n_surplus
        surplus[k] = Fraction(-1)
        # con f(e) = 1 el término constante de la fila es -χ(e)
        value = row.rhs / system.identity_value
        coefficients = list(row.coefficients) + surplus
        if value < 0:
            coefficients = [-a for a in coefficients]
            value = -value
        matrix.append(coefficients)
        rhs.append(value)
        names.append(row.name)
    return StandardForm(matrix=matrix, rhs=rhs, n_structural=n, row_names=names)


def delsarte_bound(system: DelsarteSystem) -> SizeBound:
    """
    Máximo de |B| que permiten las desigualdades de caracteres, sin fijar
    los totales de C_0 y C_1.

    Si la cota queda por debajo de (d-1)d no existe plano de orden d.

    Raises:
        InternalConsistencyError: Si el LP normalizado resulta infactible
            o no acotado
    """
    form = _size_bound_form(system)
    tableau, infeasibility = phase_one(form)
    if tableau is None:
        raise InternalConsistencyError(
            f"El LP de tamaño de d={system.d} es infactible ({infeasibility}); f = 0 debería serlo"
        )
    n = len(system.variables)
    cost = [Fraction(-1)] * n + [ZERO] * (tableau.n_columns - n)
    if tableau.minimize(cost) == UNBOUNDED:
        raise InternalConsistencyError(f"El LP de tamaño de d={system.d} no es acotado")
    values = tableau.values()[:n]
    maximizer = ThetaVector.from_mapping(
        system.d,
        {Partition.identity(system.d): Fraction(1), **dict(zip(system.variables, values))},
    )
    bound = SizeBound(d=system.d, value=1 + sum(values, ZERO), maximizer=maximizer)
    logger.info(f"Cota de tamaño para d={system.d}: |B| <= {bound.value} (plano: {bound.plane_size})")
    return bound


def _all_degenerate(bounds) -> bool:
    return all(interval.degenerate for _, interval in bounds)


def is_unique(system: DelsarteSystem) -> bool:
    """
    Indica si el poliedro factible es un solo punto.

    Raises:
        ValidationError: Si el sistema es infactible
    """
    return _all_degenerate(variable_bounds(system))


def analyze_system(system: DelsarteSystem, max_workers: Optional[int] = None) -> FeasibilityReport:
    """Factibilidad, testigo, cotas, unicidad y cota de tamaño de B."""
    size_bound = delsarte_bound(system)
    tableau, infeasibility = _feasible_tableau(system)
    if tableau is None:
        return FeasibilityReport(
            d=system.d, status=INFEASIBLE, infeasibility=infeasibility, size_bound=size_bound,
        )
    witness = _witness(system, tableau)
    bounds = _bounds_from(system, tableau, max_workers or settings.LP_BOUND_WORKERS)
    unique = _all_degenerate(bounds)
    for cycle_type, interval in bounds:
        if not interval.contains(witness.get(cycle_type)):
            raise InternalConsistencyError(f"El testigo cae fuera de la cota de {cycle_type}")
    logger.info(f"Análisis de d={system.d}: factible, {'único' if unique else 'no único'}")
    return FeasibilityReport(
        d=system.d, status=FEASIBLE, witness=witness, bounds=bounds,
        unique=unique, pivots=tableau.pivots, size_bound=size_bound,
    )
