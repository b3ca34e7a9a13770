"""
Refutadores: convierten soluciones del LP en certificados de inexistencia.

El argumento de paridad, generalizado a cualquier d:

1. Si k de los n = (d-1)d elementos de B son pares, hay exactamente
   2k(n-k) pares ordenados con diferencia impar. Si ningún k entero realiza
   la cuenta impar N_odd de θ, el plano no existe.
2. Si todas las clases sin puntos fijos del soporte de θ son pares, las
   rectas de una misma clase paralela comparten paridad, así que cada
   conjunto de paridad pura es unión de clases paralelas completas: k y n-k
   deben ser múltiplos de d.

Además, cada entrada de θ fuera de la identidad debe ser un entero par,
porque (j, m) y (m, j) dan diferencias inversas en la misma clase.
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Tuple

from django.conf import settings
from django.core.exceptions import ValidationError

from delsarte.system import EQUALITY, build_system, evaluate_theta
from delsarte.theta import ThetaVector
from rational_lp.services import FeasibilityReport, analyze_system
from symmetric.partitions import class_info

from .models import CertificateRecord
from .parity import odd_difference_count, sign_split_solutions
from .transcript import build_transcript

logger = logging.getLogger(__name__)

REFUTED = 'refuted'
INCONCLUSIVE = 'inconclusive'


@dataclass(frozen=True)
class RefutationReason:
    """Evidencia concreta, con números exactos, de una refutación."""

    kind: str
    message: str
    evidence: Dict[str, Any] = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class RefutationReport:
    d: int
    outcome: str
    reasons: Tuple[RefutationReason, ...] = ()
    theta_examined: Optional[ThetaVector] = None
    feasibility: Optional[FeasibilityReport] = None
    transcript: Tuple[str, ...] = ()

    @property
    def refuted(self) -> bool:
        return self.outcome == REFUTED

    def reason(self, kind: str) -> Optional[RefutationReason]:
        return next((r for r in self.reasons if r.kind == kind), None)


def _report(d: int, reasons: List[RefutationReason], theta: Optional[ThetaVector]) -> RefutationReport:
    return RefutationReport(
        d=d,
        outcome=REFUTED if reasons else INCONCLUSIVE,
        reasons=tuple(reasons),
        theta_examined=theta,
    )


def parity_refute(theta: ThetaVector, d: int, use_parallel_class_divisibility: bool = True) -> RefutationReport:
    """
    Aplica el argumento de paridad a un θ que cumple las igualdades del sistema.

    Args:
        theta: θ de un plano putativo de orden d
        d: Orden del plano
        use_parallel_class_divisibility: Habilita el paso de divisibilidad
            por clases paralelas

    Raises:
        ValidationError: Si θ viola las igualdades de build_system(d)
    """
    if theta.d != d:
        raise ValidationError(f"θ es de S_{theta.d}, no de S_{d}")
    violations = [
        v for v in evaluate_theta(theta, build_system(d))
        if v.kind in (EQUALITY, 'support')
    ]
    if violations:
        names = ', '.join(v.constraint for v in violations)
        raise ValidationError(f"θ no cumple las igualdades de un plano de orden {d}: {names}")

    n = (d - 1) * d
    n_odd = odd_difference_count(theta)
    splits = sign_split_solutions(n, n_odd)
    if not splits:
        return _report(d, [RefutationReason(
            'parity_split',
            f"Ningún k en [0, {n}] cumple 2k({n}-k) = {n_odd}",
            {'n': n, 'odd_differences': str(n_odd), 'split_set': []},
        )], theta)

    fixed_point_free = [c for c in theta.support() if c.fixed_points() == 0]
    all_even = all(class_info(c).sign == 1 for c in fixed_point_free)
    if use_parallel_class_divisibility and all_even:
        survivors = [k for k in splits if k % d == 0 and (n - k) % d == 0]
        if not survivors:
            return _report(d, [RefutationReason(
                'divisibility',
                f"Las clases sin puntos fijos del soporte son pares, así que k y {n}-k "
                f"deben ser múltiplos de {d}; ningún k de {list(splits)} lo es",
                {
                    'n': n,
                    'odd_differences': str(n_odd),
                    'split_set': list(splits),
                    'modulus': d,
                    'even_fixed_point_free_classes': [c.as_list() for c in fixed_point_free],
                },
            )], theta)
    return _report(d, [], theta)


def integrality_evenness_refute(theta: ThetaVector) -> RefutationReport:
    """Refuta si alguna entrada fuera de la identidad no es un entero par."""
    non_integral, odd = [], []
    for cycle_type, value in theta:
        if cycle_type.is_identity():
            continue
        if value.denominator != 1:
            non_integral.append((cycle_type, value))
        elif value.numerator % 2:
            odd.append((cycle_type, value))

    reasons = []
    if non_integral:
        reasons.append(RefutationReason(
            'integrality',
            'Entradas no enteras: ' + ', '.join(f"θ{c} = {v}" for c, v in non_integral),
            {'entries': [[c.as_list(), str(v)] for c, v in non_integral]},
        ))
    if odd:
        reasons.append(RefutationReason(
            'evenness',
            'Entradas impares: ' + ', '.join(f"θ{c} = {v}" for c, v in odd),
            {'entries': [[c.as_list(), str(v)] for c, v in odd]},
        ))
    return _report(theta.d, reasons, theta)


def certify(d: int, even_check: bool = True) -> RefutationReport:
    """
    Pipeline completo: sistema, LP exacto y refutadores sobre el punto único.

    Args:
        d: Orden, 2 <= d <= MAX_TABLE_DEGREE
        even_check: Aplica el refutador de integralidad y paridad

    Returns:
        Reporte con la transcripción paso a paso
    """
    if not isinstance(d, int) or d < 2 or d > settings.MAX_TABLE_DEGREE:
        raise ValidationError(f"certify: d debe estar entre 2 y {settings.MAX_TABLE_DEGREE}, se recibió {d!r}")

    system = build_system(d, even_constraints=even_check)
    feasibility = analyze_system(system)
    theta = feasibility.witness
    reasons: List[RefutationReason] = []

    size_bound = feasibility.size_bound
    if size_bound is not None and size_bound.excludes_plane:
        reasons.append(RefutationReason(
            'size_bound',
            f"Ningún B de S_{d} con diferencias fuera de A supera {size_bound.value} elementos; "
            f"un plano necesita {size_bound.plane_size}",
            {'bound': str(size_bound.value), 'plane_size': size_bound.plane_size},
        ))

    if not feasibility.feasible:
        reasons.append(RefutationReason(
            'lp_infeasible',
            f"El sistema lineal de orden {d} no tiene solución",
            {'infeasibility': str(feasibility.infeasibility)},
        ))
    elif feasibility.unique:
        reasons.extend(parity_refute(theta, d).reasons)
        if even_check:
            reasons.extend(integrality_evenness_refute(theta).reasons)

    report = RefutationReport(
        d=d,
        outcome=REFUTED if reasons else INCONCLUSIVE,
        reasons=tuple(reasons),
        theta_examined=theta,
        feasibility=feasibility,
    )
    report = replace(report, transcript=build_transcript(system, report))
    logger.info(f"Certificado para d={d}: {report.outcome}")
    return report


def archive_certificate(report: RefutationReport, payload: Dict[str, Any]) -> CertificateRecord:
    """
    Guarda el certificado serializado en la base de datos.

    Args:
        report: Reporte de certify
        payload: Reporte ya serializado (con schema_version)
    """
    record = CertificateRecord.objects.create(
        order=report.d,
        outcome=report.outcome,
        schema_version=payload.get('schema_version', settings.REPORT_SCHEMA_VERSION),
        report=payload,
        transcript='\n'.join(report.transcript),
    )
    logger.info(f"Certificado {record.id} archivado para d={report.d}")
    return record
