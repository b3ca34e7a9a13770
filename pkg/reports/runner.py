"""
Orquestador de los comandos de línea de comandos.

Cada comando construye un artefacto (JSON, CSV o texto) a partir de las
aplicaciones de dominio. ``run`` nunca lanza errores de dominio: los traduce a
un estado de salida para que los comandos de gestión y las pruebas compartan
el mismo contrato.
"""

import csv
import io
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, Optional

from django.conf import settings
from django.core.exceptions import ValidationError
from django.db import DatabaseError
from rest_framework.renderers import JSONRenderer

from characters.serializers import CharacterTableSerializer, ValidationReportSerializer, table_to_csv
from characters.tables import character_table, validate_table
from delsarte.serializers import DelsarteSystemSerializer, ThetaVectorSerializer, ViolationSerializer
from delsarte.system import build_system, evaluate_theta
from delsarte_planes.exceptions import InternalConsistencyError
from planes.serializers import AffineLineSetSerializer, ScalarProductSerializer
from planes.services import build_plane, proposition_check, random_subset, theta_of_subset
from rational_lp.serializers import FeasibilityReportSerializer
from rational_lp.services import analyze_system
from refutation.serializers import RefutationReportSerializer
from refutation.services import archive_certificate, certify
from refutation.transcript import format_grid
from symmetric.partitions import class_listing, forbidden_set_size
from symmetric.serializers import ConjugacyClassSerializer

logger = logging.getLogger(__name__)

FORMATS = ('json', 'csv', 'text')
FORMATS_BY_COMMAND = {
    'partitions': FORMATS,
    'table': FORMATS,
    'system': ('json', 'text'),
    'solve': ('json', 'text'),
    'certify': ('json', 'text'),
    'oracle': ('json', 'text'),
    'random_check': ('json', 'text'),
}

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_INTERNAL = 4


@dataclass(frozen=True)
class RunConfig:
    """
    Configuración de una ejecución.

    ``order`` es d (o q para ``oracle``); ``size`` es n para ``random_check``.
    """

    command: str
    order: int
    even_check: bool = True
    output_format: str = 'json'
    seed: Optional[int] = None
    output_path: Optional[str] = None
    size: Optional[int] = None
    trials: Optional[int] = None
    save: bool = False


@dataclass(frozen=True)
class RunResult:
    exit_status: int
    artifact: str

    @property
    def ok(self) -> bool:
        return self.exit_status == EXIT_OK


def render_json(command: str, data: Dict[str, Any]) -> str:
    payload = {'schema_version': settings.REPORT_SCHEMA_VERSION, 'command': command}
    payload.update(data)
    return JSONRenderer().render(payload, renderer_context={'indent': 2}).decode('utf-8') + '\n'


def _partitions(config: RunConfig) -> str:
    classes = class_listing(config.order)
    if config.output_format == 'json':
        return render_json(config.command, {
            'd': config.order,
            'count': len(classes),
            'forbidden_set_size': str(forbidden_set_size(config.order)),
            'classes': ConjugacyClassSerializer(classes, many=True).data,
        })
    if config.output_format == 'csv':
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(['cycle_type', 'size', 'fixed_points', 'sign'])
        writer.writerows([str(c.cycle_type), c.size, c.fixed_points, c.sign] for c in classes)
        return buffer.getvalue()
    grid = [['clase', 'tamaño', 'puntos fijos', 'signo']]
    grid.extend([str(c.cycle_type), str(c.size), str(c.fixed_points), f"{c.sign:+d}"] for c in classes)
    lines = [f"S_{config.order}: {len(classes)} clases de conjugación"]
    lines.extend(format_grid(grid))
    lines.append(f"Permutaciones con dos o más puntos fijos: {forbidden_set_size(config.order)}")
    return '\n'.join(lines) + '\n'


def _table(config: RunConfig) -> str:
    table = character_table(config.order)
    if config.output_format == 'csv':
        return table_to_csv(table)
    if config.output_format == 'text':
        grid = [[''] + [str(c) for c in table.classes]]
        grid.extend([str(irrep)] + [str(v) for v in row] for irrep, row in zip(table.irreps, table.values))
        return '\n'.join(format_grid(grid)) + '\n'
    return render_json(config.command, {
        **CharacterTableSerializer(table).data,
        'validation': ValidationReportSerializer(validate_table(table)).data,
    })


def _system(config: RunConfig) -> str:
    system = build_system(config.order, even_constraints=config.even_check)
    if config.output_format == 'text':
        return system.to_lp_text()
    return render_json(config.command, DelsarteSystemSerializer(system).data)


def _solve(config: RunConfig) -> str:
    system = build_system(config.order, even_constraints=config.even_check)
    report = analyze_system(system, max_workers=settings.LP_BOUND_WORKERS)
    if config.output_format == 'text':
        lines = [f"d = {report.d}: {report.status}"]
        if report.size_bound is not None:
            lines.append(f"Cota de tamaño: |B| <= {report.size_bound.value} (un plano necesita {report.size_bound.plane_size})")
        if report.feasible:
            lines.append(f"Solución única: {'sí' if report.unique else 'no'}")
            lines.extend(f"  θ{c} ∈ [{i.lower}, {i.upper}]" for c, i in report.bounds)
        else:
            lines.append(f"Infactibilidad de fase 1: {report.infeasibility}")
        return '\n'.join(lines) + '\n'
    return render_json(config.command, FeasibilityReportSerializer(report).data)


def _certify(config: RunConfig) -> str:
    report = certify(config.order, even_check=config.even_check)
    data = RefutationReportSerializer(report).data
    if config.save:
        record = archive_certificate(report, {
            'schema_version': settings.REPORT_SCHEMA_VERSION,
            **data,
        })
        logger.info(f"certify --save: registro {record.id}")
    if config.output_format == 'text':
        return '\n'.join(report.transcript) + '\n'
    return render_json(config.command, data)


def _oracle(config: RunConfig) -> str:
    plane = build_plane(config.order)
    theta = theta_of_subset(plane.lines)
    violations = evaluate_theta(theta, build_system(plane.d, even_constraints=config.even_check))
    products = proposition_check(theta, character_table(plane.d))
    confirmed = not violations and all(p.value >= 0 for p in products)
    if not confirmed:
        logger.error(f"El plano afín de orden {plane.d} no satisface su propio sistema")
        raise InternalConsistencyError(
            f"θ del plano de orden {plane.d} viola: {', '.join(v.constraint for v in violations) or 'Proposición'}"
        )
    if config.output_format == 'text':
        lines = [
            f"Plano afín de orden {plane.d}: {len(plane.lines)} rectas en {len(plane.parallel_classes())} clases paralelas",
            'θ: ' + ', '.join(f"{c}={v}" for c, v in theta),
            f"Violaciones del sistema: {len(violations)}",
            f"Productos escalares mínimos: {min(p.value for p in products)}",
            'Testigo confirmado',
        ]
        return '\n'.join(lines) + '\n'
    return render_json(config.command, {
        'q': plane.d,
        'lines': len(plane.lines),
        'parallel_classes': len(plane.parallel_classes()),
        'line_set': AffineLineSetSerializer(plane).data['lines'],
        'theta': ThetaVectorSerializer(theta).data,
        'violations': ViolationSerializer(violations, many=True).data,
        'scalar_products': ScalarProductSerializer(products, many=True).data,
        'confirmed': confirmed,
    })


def _random_check(config: RunConfig) -> str:
    if config.size is None:
        raise ValidationError("random_check requiere el tamaño n del subconjunto")
    seed = settings.DEFAULT_RANDOM_SEED if config.seed is None else config.seed
    trials = settings.RANDOM_CHECK_TRIALS if config.trials is None else config.trials
    if trials < 1:
        raise ValidationError(f"random_check: se requiere al menos un ensayo, se recibió {trials}")

    table = character_table(config.order)
    minimum = None
    for trial in range(trials):
        subset = random_subset(config.order, config.size, seed + trial)
        products = proposition_check(theta_of_subset(subset), table)
        negative = [p for p in products if p.value < 0]
        if negative:
            logger.error(f"Ensayo {trial} (semilla {seed + trial}): producto escalar negativo")
            raise InternalConsistencyError(
                f"Producto escalar negativo para chi{negative[0].irrep} con semilla {seed + trial}"
            )
        trial_minimum = min(p.value for p in products)
        minimum = trial_minimum if minimum is None else min(minimum, trial_minimum)
    logger.info(f"random_check d={config.order} n={config.size}: {trials} ensayos sin fallas")

    if config.output_format == 'text':
        return (
            f"S_{config.order}, n = {config.size}, semilla {seed}: {trials} ensayos, "
            f"mínimo producto escalar {minimum}\n"
        )
    return render_json(config.command, {
        'd': config.order,
        'n': config.size,
        'seed': seed,
        'trials': trials,
        'passed': True,
        'min_scalar_product': str(minimum),
    })


HANDLERS: Dict[str, Callable[[RunConfig], str]] = {
    'partitions': _partitions,
    'table': _table,
    'system': _system,
    'solve': _solve,
    'certify': _certify,
    'oracle': _oracle,
    'random_check': _random_check,
}


def _write(path: str, artifact: str) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(artifact, encoding='utf-8')


def run(config: RunConfig) -> RunResult:
    """
    Ejecuta un comando y devuelve el estado de salida con su artefacto.

    Estados: 0 éxito, 2 error de uso o de dominio, 3 error de E/S o de base de datos,
    4 error de consistencia interna. En caso de error el artefacto es el
    mensaje.
    """
    if config.command not in HANDLERS:
        return RunResult(EXIT_USAGE, f"Comando desconocido: {config.command}")
    if config.output_format not in FORMATS_BY_COMMAND[config.command]:
        return RunResult(
            EXIT_USAGE,
            f"El comando {config.command} no admite el formato {config.output_format}",
        )

    try:
        artifact = HANDLERS[config.command](config)
    except ValidationError as e:
        message = '; '.join(e.messages)
        logger.warning(f"{config.command} {config.order}: {message}")
        return RunResult(EXIT_USAGE, message)
    except InternalConsistencyError as e:
        logger.error(f"{config.command} {config.order}: error de consistencia interna: {e}")
        return RunResult(EXIT_INTERNAL, str(e))
    except DatabaseError as e:
        logger.error(f"{config.command} {config.order}: no se pudo archivar el certificado: {e}")
        return RunResult(EXIT_IO, f"No se pudo archivar el certificado (¿se ejecutó migrate?): {e}")

    if config.output_path:
        try:
            _write(config.output_path, artifact)
        except OSError as e:
            logger.error(f"No se pudo escribir {config.output_path}: {e}")
            return RunResult(EXIT_IO, f"No se pudo escribir {config.output_path}: {e}")
        logger.info(f"Reporte escrito en {config.output_path}")
    return RunResult(EXIT_OK, artifact)
