"""
Tabla de caracteres de S_d y sus verificadores independientes.

Los verificadores (ortogonalidad de filas y columnas, fórmula de ganchos y
Σ dim² = d!) no usan la recursión de Murnaghan-Nakayama, así que sirven de
oráculo de corrección para la tabla generada.
"""

import logging
import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from django.conf import settings
from django.core.exceptions import ValidationError

from delsarte_planes.exceptions import InternalConsistencyError
from symmetric.partitions import Partition, class_info, enumerate_partitions

from .murnaghan_nakayama import cache_size, irrep_dimension, mn_character

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharacterTable:
    """
    Tabla de caracteres exacta: values[i][j] = χ_{irreps[i]}(classes[j]).

    Filas y columnas siguen el orden de ``enumerate_partitions``.
    """

    d: int
    irreps: Tuple[Partition, ...]
    classes: Tuple[Partition, ...]
    values: Tuple[Tuple[int, ...], ...]
    _class_index: Dict[Partition, int] = field(init=False, repr=False, compare=False)
    _irrep_index: Dict[Partition, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, '_class_index', {c: j for j, c in enumerate(self.classes)})
        object.__setattr__(self, '_irrep_index', {m: i for i, m in enumerate(self.irreps)})

    def value(self, irrep: Partition, cycle_type: Partition) -> int:
        return self.values[self._irrep_index[irrep]][self._class_index[cycle_type]]

    def row(self, irrep: Partition) -> Tuple[int, ...]:
        return self.values[self._irrep_index[irrep]]

    def column(self, cycle_type: Partition) -> Tuple[int, ...]:
        j = self._class_index[cycle_type]
        return tuple(row[j] for row in self.values)

    def restricted_row(self, irrep: Partition, classes: Sequence[Partition]) -> Tuple[int, ...]:
        return tuple(self.value(irrep, c) for c in classes)

    def dimension(self, irrep: Partition) -> int:
        return self.value(irrep, Partition.identity(self.d))

    def with_entry(self, irrep: Partition, cycle_type: Partition, new_value: int) -> 'CharacterTable':
        """Copia con una entrada reemplazada (útil para probar los verificadores)."""
        i, j = self._irrep_index[irrep], self._class_index[cycle_type]
        rows = [list(r) for r in self.values]
        rows[i][j] = new_value
        return replace(self, values=tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    """Resultado de cada verificación sobre una tabla."""

    d: int
    checks: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]


def _check_row_orthogonality(table: CharacterTable, sizes: Sequence[int]) -> CheckResult:
    order = math.factorial(table.d)
    for i, row_i in enumerate(table.values):
        for k in range(i, len(table.values)):
            row_k = table.values[k]
            total = sum(s * a * b for s, a, b in zip(sizes, row_i, row_k))
            expected = order if i == k else 0
            if total != expected:
                return CheckResult(
                    'row_orthogonality', False,
                    f"filas {table.irreps[i]} y {table.irreps[k]}: {total} != {expected}",
                )
    return CheckResult('row_orthogonality', True)


def _check_column_orthogonality(table: CharacterTable, sizes: Sequence[int]) -> CheckResult:
    order = math.factorial(table.d)
    columns = list(zip(*table.values))
    for j, col_j in enumerate(columns):
        for k in range(j, len(columns)):
            total = sum(a * b for a, b in zip(col_j, columns[k]))
            expected = order // sizes[j] if j == k else 0
            if total != expected:
                return CheckResult(
                    'column_orthogonality', False,
                    f"columnas {table.classes[j]} y {table.classes[k]}: {total} != {expected}",
                )
    return CheckResult('column_orthogonality', True)


def _check_hook_lengths(table: CharacterTable) -> CheckResult:
    identity = Partition.identity(table.d)
    for irrep in table.irreps:
        expected = irrep_dimension(irrep)
        if table.value(irrep, identity) != expected:
            return CheckResult(
                'hook_length_dimensions', False,
                f"χ_{irrep}(e) = {table.value(irrep, identity)}, fórmula de ganchos = {expected}",
            )
    return CheckResult('hook_length_dimensions', True)


def _check_dimension_squares(table: CharacterTable) -> CheckResult:
    total = sum(irrep_dimension(irrep) ** 2 for irrep in table.irreps)
    order = math.factorial(table.d)
    return CheckResult('sum_of_squared_dimensions', total == order, f"{total} vs {order}")


def validate_table(table: CharacterTable) -> ValidationReport:
    """
    Verifica una tabla de caracteres con identidades enteras exactas.

    Los fallos se reportan, no se lanzan.
    """
    sizes = [class_info(c).size for c in table.classes]
    checks = (
        _check_row_orthogonality(table, sizes),
        _check_column_orthogonality(table, sizes),
        _check_hook_lengths(table),
        _check_dimension_squares(table),
    )
    return ValidationReport(d=table.d, checks=checks)


def build_table(d: int) -> CharacterTable:
    partitions = enumerate_partitions(d)
    values = tuple(
        tuple(mn_character(irrep, cycle_type) for cycle_type in partitions)
        for irrep in partitions
    )
    return CharacterTable(d=d, irreps=partitions, classes=partitions, values=values)


@lru_cache(maxsize=None)
def _validated_table(d: int) -> CharacterTable:
    table = build_table(d)
    report = validate_table(table)
    if not report.passed:
        details = '; '.join(f"{c.name}: {c.detail}" for c in report.failures())
        logger.error(f"La tabla de caracteres de S_{d} no pasó la validación: {details}")
        raise InternalConsistencyError(f"Tabla de S_{d} inconsistente: {details}")
    logger.info(
        f"Tabla de caracteres de S_{d} construida: {len(table.irreps)}x{len(table.classes)} "
        f"(caché MN: {cache_size()} entradas)"
    )
    return table


def character_table(d: int) -> CharacterTable:
    """
    Construye y valida la tabla completa p(d) x p(d) de S_d.

    Raises:
        ValidationError: Si d está fuera de [1, MAX_TABLE_DEGREE]
        InternalConsistencyError: Si la tabla generada no pasa validate_table
    """
    if not isinstance(d, int) or d < 1 or d > settings.MAX_TABLE_DEGREE:
        raise ValidationError(f"character_table: d debe estar entre 1 y {settings.MAX_TABLE_DEGREE}, se recibió {d!r}")
    return _validated_table(d)


def sum_of_character_rows(
    table: CharacterTable, irreps: Iterable[Partition], classes: Sequence[Partition]
) -> Tuple[int, ...]:
    """Suma de las filas indicadas, restringida a las clases dadas."""
    total = [0] * len(classes)
    for irrep in irreps:
        for j, value in enumerate(table.restricted_row(irrep, classes)):
            total[j] += value
    return tuple(total)
