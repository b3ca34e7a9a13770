"""
Simplex de tableau en aritmética racional exacta con la regla de Bland.

Forma estándar: minimizar c·x sujeto a A x = b, x >= 0, b >= 0. La fase 1
usa una variable artificial por fila; la regla de Bland (menor índice que
entra, menor índice básico que sale ante empates) garantiza terminación.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

OPTIMAL = 'optimal'
UNBOUNDED = 'unbounded'

ZERO = Fraction(0)


@dataclass
class StandardForm:
    """A x = b con b >= 0; las primeras ``n_structural`` columnas son θ."""

    matrix: List[List[Fraction]]
    rhs: List[Fraction]
    n_structural: int
    row_names: List[str]

    @property
    def n_rows(self) -> int:
        return len(self.rhs)

    @property
    def n_columns(self) -> int:
        return len(self.matrix[0]) if self.matrix else self.n_structural


class SimplexTableau:
    """Tableau en forma canónica respecto de ``basis`` (una columna por fila)."""

    def __init__(self, matrix: List[List[Fraction]], rhs: List[Fraction], basis: List[int], n_columns: int):
        self.matrix = matrix
        self.rhs = rhs
        self.basis = basis
        self.n_columns = n_columns
        self.pivots = 0

    def copy(self) -> 'SimplexTableau':
        tableau = SimplexTableau(
            [list(row) for row in self.matrix], list(self.rhs), list(self.basis), self.n_columns
        )
        tableau.pivots = self.pivots
        return tableau

    def pivot(self, i: int, j: int) -> None:
        piv = self.matrix[i][j]
        row_i = [a / piv if a else ZERO for a in self.matrix[i]]
        rhs_i = self.rhs[i] / piv
        self.matrix[i] = row_i
        self.rhs[i] = rhs_i
        for k, row_k in enumerate(self.matrix):
            if k == i:
                continue
            f = row_k[j]
            if not f:
                continue
            self.matrix[k] = [a - f * b if b else a for a, b in zip(row_k, row_i)]
            self.rhs[k] -= f * rhs_i
        self.basis[i] = j
        self.pivots += 1
        logger.debug(f"Pivote {self.pivots}: fila {i}, columna {j}")

    def reduced_costs(self, cost: Sequence[Fraction]) -> List[Fraction]:
        reduced = list(cost)
        for i, b in enumerate(self.basis):
            c_b = cost[b]
            if not c_b:
                continue
            for j, a in enumerate(self.matrix[i]):
                if a:
                    reduced[j] -= c_b * a
        return reduced

    def objective(self, cost: Sequence[Fraction]) -> Fraction:
        return sum((cost[b] * value for b, value in zip(self.basis, self.rhs)), ZERO)

    def minimize(self, cost: Sequence[Fraction]) -> str:
        """
        Itera pivotes de Bland hasta el óptimo.

        Returns:
            OPTIMAL u UNBOUNDED
        """
        while True:
            reduced = self.reduced_costs(cost)
            basic = set(self.basis)
            entering = next(
                (j for j in range(self.n_columns) if j not in basic and reduced[j] < 0), None
            )
            if entering is None:
                return OPTIMAL
            candidates = [
                (self.rhs[i] / row[entering], self.basis[i], i)
                for i, row in enumerate(self.matrix)
                if row[entering] > 0
            ]
            if not candidates:
                return UNBOUNDED
            _, _, leaving = min(candidates)
            self.pivot(leaving, entering)

    def values(self) -> List[Fraction]:
        values = [ZERO] * self.n_columns
        for b, value in zip(self.basis, self.rhs):
            values[b] = value
        return values


def phase_one(form: StandardForm) -> Tuple[Optional[SimplexTableau], Fraction]:
    """
    Busca una base factible de A x = b, x >= 0.

    Returns:
        (tableau factible sin columnas artificiales, 0) o (None, infactibilidad)
    """
    m, n = form.n_rows, form.n_columns
    matrix = [
        list(row) + [Fraction(1) if k == i else ZERO for k in range(m)]
        for i, row in enumerate(form.matrix)
    ]
    tableau = SimplexTableau(matrix, list(form.rhs), [n + i for i in range(m)], n + m)
    cost = [ZERO] * n + [Fraction(1)] * m
    tableau.minimize(cost)
    infeasibility = tableau.objective(cost)
    if infeasibility > 0:
        logger.info(f"Fase 1 terminó con infactibilidad {infeasibility} tras {tableau.pivots} pivotes")
        return None, infeasibility

    # sacar de la base las artificiales que quedaron en nivel cero
    for i in range(m):
        if tableau.basis[i] < n:
            continue
        column = next((j for j in range(n) if tableau.matrix[i][j]), None)
        if column is not None:
            tableau.pivot(i, column)

    keep = [i for i in range(m) if tableau.basis[i] < n]
    if len(keep) < m:
        logger.debug(f"Fase 1: {m - len(keep)} filas redundantes eliminadas")
    feasible = SimplexTableau(
        [tableau.matrix[i][:n] for i in keep],
        [tableau.rhs[i] for i in keep],
        [tableau.basis[i] for i in keep],
        n,
    )
    feasible.pivots = tableau.pivots
    logger.debug(f"Fase 1 factible tras {tableau.pivots} pivotes")
    return feasible, ZERO


def optimize_column(tableau: SimplexTableau, column: int, maximize: bool) -> Optional[Fraction]:
    """
    Mínimo (o máximo) de una columna sobre el poliedro, partiendo de una base factible.

    Returns:
        Valor óptimo exacto, o None si el problema no es acotado
    """
    work = tableau.copy()
    cost = [ZERO] * work.n_columns
    cost[column] = Fraction(-1) if maximize else Fraction(1)
    if work.minimize(cost) == UNBOUNDED:
        return None
    return work.values()[column]


