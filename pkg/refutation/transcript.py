"""
Transcripción legible de un certificado.

La tabla sigue la disposición clásica: clases admitidas como columnas, una
fila por carácter irreducible y los valores de θ en la última fila.
"""

from typing import List, Sequence, Tuple

from characters.tables import character_table
from delsarte.system import DelsarteSystem
from symmetric.partitions import Partition

from .parity import odd_difference_count, sign_split_solutions


def format_grid(rows: Sequence[Sequence[str]]) -> List[str]:
    widths = [max(len(row[j]) for row in rows) for j in range(len(rows[0]))]
    return [
        '  '.join(cell.rjust(width) for cell, width in zip(row, widths)).rstrip()
        for row in rows
    ]


def _classes_line(label: str, classes: Sequence[Partition]) -> str:
    return f"{label} = {{{', '.join(str(c) for c in classes)}}}"


def build_transcript(system: DelsarteSystem, report) -> Tuple[str, ...]:
    d = system.d
    n = system.identity_value
    table = character_table(d)
    identity = Partition.identity(d)
    c0 = [c for c in system.variables if c.fixed_points() == 0]
    c1 = [c for c in system.variables if c.fixed_points() == 1]
    c0_total, c1_total = (row.rhs for row in system.equalities)

    lines = [
        f"Certificado para un plano proyectivo de orden d = {d}",
        f"B: {n} permutaciones de S_{d}; {n * n} diferencias ordenadas",
        _classes_line('C_0', c0),
        _classes_line('C_1', c1),
        f"Igualdades: θ(e) = {n}, Σ_C_0 θ = {c0_total}, Σ_C_1 θ = {c1_total}",
        '',
    ]

    columns = [identity] + list(system.variables)
    grid = [[''] + ['e'] + [str(c) for c in system.variables]]
    for irrep in table.irreps:
        grid.append([f"chi{irrep}"] + [str(v) for v in table.restricted_row(irrep, columns)])
    feasibility = report.feasibility
    theta = report.theta_examined
    if theta is not None:
        grid.append(['θ'] + [str(theta.get(c)) for c in columns])
    lines.extend(format_grid(grid))
    lines.append('')

    if feasibility is not None and feasibility.size_bound is not None:
        size_bound = feasibility.size_bound
        lines.append(
            f"Cota de tamaño: |B| <= {size_bound.value} con diferencias fuera de A "
            f"(un plano necesita {size_bound.plane_size})"
        )
    if feasibility is None or not feasibility.feasible:
        lines.append('LP exacto: infactible')
    else:
        uniqueness = 'solución única' if feasibility.unique else 'solución no única'
        lines.append(f"LP exacto: factible, {uniqueness} ({feasibility.pivots} pivotes en fase 1)")
        for cycle_type, interval in feasibility.bounds:
            lines.append(f"  θ{cycle_type} ∈ [{interval.lower}, {interval.upper}]")
        values = system.values_of(theta)
        tight = [row.name for row in system.character_inequalities if row.residual(values) == 0]
        if tight:
            lines.append(f"Desigualdades activas en el testigo: {', '.join(tight)}")

    if theta is not None and feasibility is not None and feasibility.unique:
        n_odd = odd_difference_count(theta)
        splits = sign_split_solutions(n, n_odd)
        lines.append(f"Diferencias impares: {n_odd} de {n * n}")
        lines.append(f"Divisiones de paridad: k ∈ {{{', '.join(str(k) for k in splits)}}} con 2k({n}-k) = {n_odd}")

    for reason in report.reasons:
        lines.append(f"[{reason.kind}] {reason.message}")
    lines.append(f"Resultado: {report.outcome}")
    return tuple(lines)
