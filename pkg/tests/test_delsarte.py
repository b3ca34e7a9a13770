"""
Pruebas para el vector θ y el sistema de Delsarte.
"""

from fractions import Fraction

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from characters.tables import character_table
from delsarte.serializers import DelsarteSystemSerializer, RationalField
from delsarte.system import (
    CHARACTER, EQUALITY, NONNEGATIVITY, build_system, equality_constants,
    evaluate_theta, supported_classes,
)
from delsarte.theta import ThetaVector
from planes.fields import SUPPORTED_ORDERS
from planes.services import build_plane, proposition_check, theta_of_subset
from symmetric.partitions import Partition, class_info
from tests.utils import order_six_witness

P = Partition


class ThetaVectorTest(SimpleTestCase):
    """Pruebas para ThetaVector."""

    def test_from_mapping_orders_entries(self):
        """Prueba el orden canónico de las entradas."""
        theta = order_six_witness()
        self.assertEqual(
            [c for c, _ in theta],
            [P((5, 1)), P((3, 3)), P((3, 2, 1)), P((1,) * 6)],
        )
        self.assertEqual(theta.identity_entry, 30)
        self.assertEqual(theta.get(P((6,))), 0)
        self.assertEqual(theta.total(), 900)

    def test_foreign_classes_rejected(self):
        """Prueba que se rechazan clases de otro S_d."""
        with self.assertRaises(ValidationError):
            ThetaVector.from_mapping(6, {P((3, 2)): 1})

    def test_with_entry_and_support(self):
        """Prueba with_entry y el soporte."""
        theta = order_six_witness().with_entry(P((6,)), 0)
        self.assertEqual(len(theta.support()), 4)
        self.assertEqual(theta.with_entry(P((6,)), Fraction(1, 2)).get(P((6,))), Fraction(1, 2))


class SupportedClassesTest(SimpleTestCase):
    """Pruebas para supported_classes."""

    def test_order_six(self):
        """Identidad, luego C_0 y luego C_1."""
        classes = supported_classes(6)
        self.assertEqual(classes[0], P((1,) * 6))
        self.assertEqual(set(classes[1:5]), {P((6,)), P((4, 2)), P((3, 3)), P((2, 2, 2))})
        self.assertEqual(set(classes[5:]), {P((5, 1)), P((3, 2, 1))})

    def test_order_twelve(self):
        """Prueba que d = 12 tiene 36 clases admitidas."""
        self.assertEqual(len(supported_classes(12)), 36)

    def test_order_two(self):
        """Prueba las clases admitidas de S_2."""
        self.assertEqual(supported_classes(2), (P((1, 1)), P((2,))))

    def test_order_too_small(self):
        """Prueba que d < 2 es un error de dominio."""
        with self.assertRaises(ValidationError):
            supported_classes(1)


class BuildSystemTest(SimpleTestCase):
    """Pruebas para build_system."""

    def setUp(self):
        """Configuración inicial para las pruebas."""
        self.system = build_system(6)

    def test_shape(self):
        """Prueba la forma del sistema de d = 6."""
        self.assertEqual(self.system.identity_value, 30)
        self.assertEqual(len(self.system.variables), 6)
        self.assertNotIn(P((1,) * 6), self.system.variables)
        self.assertEqual(len(self.system.equalities), 2)
        self.assertEqual(len(self.system.character_inequalities), 11)
        self.assertEqual(len(self.system.nonnegativity_inequalities), 6)

    def test_equality_constants(self):
        """θ(e) = 30, Σ_C_0 = 150 y Σ_C_1 = 720 para d = 6."""
        self.assertEqual(equality_constants(6), (30, 150, 720))
        self.assertEqual([row.rhs for row in self.system.equalities], [150, 720])
        self.assertTrue(all(row.kind == EQUALITY for row in self.system.equalities))

    def test_equalities_account_for_every_pair(self):
        """Prueba (d-1)d + (d-1)²d + (d-2)(d-1)d² = ((d-1)d)² para 2 <= d <= 12."""
        for d in range(2, 13):
            self.assertEqual(sum(equality_constants(d)), ((d - 1) * d) ** 2, f"d={d}")

    def test_trivial_character_row_is_slack(self):
        """Prueba que la fila del carácter trivial tiene coeficientes 1 y la cumple todo θ no negativo."""
        for q in SUPPORTED_ORDERS:
            system = build_system(q)
            row = next(r for r in system.character_inequalities if r.irrep == P((q,)))
            self.assertTrue(all(a == 1 for a in row.coefficients))
            self.assertEqual(row.rhs, -system.identity_value)
            self.assertTrue(row.is_satisfied([Fraction(0)] * len(system.variables)))
            theta = theta_of_subset(build_plane(q).lines)
            self.assertGreater(row.residual(system.values_of(theta)), 0)

    def test_sign_character_row_on_planes(self):
        """Prueba que (d-1)d + Σ signo(C)·θ_C >= 0 en cada plano y coincide con S_χ del signo."""
        for q in SUPPORTED_ORDERS:
            system = build_system(q)
            sign_irrep = P.identity(q)
            row = next(r for r in system.character_inequalities if r.irrep == sign_irrep)
            theta = theta_of_subset(build_plane(q).lines)
            value = system.identity_value + sum(
                class_info(c).sign * theta.get(c) for c in system.variables
            )
            self.assertGreaterEqual(value, 0, f"q={q}")
            self.assertEqual(row.residual(system.values_of(theta)), value)
            products = {p.irrep: p.value for p in proposition_check(theta, character_table(q))}
            self.assertEqual(products[sign_irrep], value)

    def test_character_row(self):
        """La fila de χ_[5,1]: 5·30 - (x + y + z + v) >= 0."""
        row = next(r for r in self.system.character_inequalities if r.irrep == P((5, 1)))
        self.assertEqual(row.kind, CHARACTER)
        self.assertEqual(row.rhs, -150)
        coefficients = dict(zip(self.system.variables, row.coefficients))
        self.assertEqual(coefficients[P((3, 3))], -1)
        self.assertEqual(coefficients[P((3, 2, 1))], 0)

    def test_nonnegativity_rows(self):
        """Prueba las filas de no negatividad."""
        row = self.system.nonnegativity_inequalities[0]
        self.assertEqual(row.kind, NONNEGATIVITY)
        self.assertEqual(sum(row.coefficients), 1)

    def test_lp_text(self):
        """Prueba la exportación en formato LP."""
        text = self.system.to_lp_text()
        self.assertIn('C0_total', text)
        self.assertIn('chi[3,2,1]', text)
        self.assertTrue(text.endswith('end\n'))

    def test_serializer_output(self):
        """Prueba la serialización del sistema."""
        data = DelsarteSystemSerializer(self.system).data
        self.assertEqual(len(data['inequalities']), 11)
        self.assertEqual(data['equalities'][0]['rhs'], {'num': '150', 'den': '1'})

    def test_rational_field(self):
        """Prueba el campo racional {num, den}."""
        field = RationalField()
        self.assertEqual(field.to_representation(Fraction(-3, 4)), {'num': '-3', 'den': '4'})
        self.assertEqual(field.to_internal_value({'num': '6', 'den': '8'}), Fraction(3, 4))


class EvaluateThetaTest(SimpleTestCase):
    """Pruebas para evaluate_theta."""

    def setUp(self):
        """Configuración inicial para las pruebas."""
        self.system = build_system(6)

    def test_witness_is_feasible(self):
        """Prueba que el punto único de d = 6 es factible."""
        self.assertEqual(evaluate_theta(order_six_witness(), self.system), [])

    def test_bound_violation(self):
        """b = 271 viola la fila de χ_[4,2] con residuo -1."""
        theta = order_six_witness({(3, 2, 1): 449, (5, 1): 271})
        violations = {v.constraint: v for v in evaluate_theta(theta, self.system)}
        self.assertIn('chi[4,2]', violations)
        self.assertEqual(violations['chi[4,2]'].residual, -1)
        self.assertNotIn('C1_total', violations)

    def test_equality_violation(self):
        """Prueba que se reporta la violación de C0_total."""
        theta = order_six_witness({(3, 3): 151})
        names = [v.constraint for v in evaluate_theta(theta, self.system)]
        self.assertIn('C0_total', names)

    def test_identity_violation(self):
        """Prueba que se reporta un θ(e) incorrecto."""
        theta = order_six_witness({(1, 1, 1, 1, 1, 1): 29})
        violations = evaluate_theta(theta, self.system)
        self.assertEqual([v.constraint for v in violations], ['identity'])
        self.assertEqual(violations[0].residual, -1)

    def test_support_violation(self):
        """Una clase con dos puntos fijos se reporta, no se lanza."""
        theta = order_six_witness({(4, 1, 1): 2})
        kinds = [v.kind for v in evaluate_theta(theta, self.system)]
        self.assertIn('support', kinds)

    def test_evenness_flag(self):
        """Prueba la condición de paridad a posteriori."""
        even_system = build_system(6, even_constraints=True)
        self.assertEqual(evaluate_theta(order_six_witness(), even_system), [])
        theta = order_six_witness({(3, 3): 149, (2, 2, 2): 1})
        kinds = [v.kind for v in evaluate_theta(theta, even_system)]
        self.assertEqual(kinds.count('evenness'), 2)

    def test_mismatched_degree(self):
        """Prueba que θ y sistema de órdenes distintos son un error."""
        with self.assertRaises(ValidationError):
            evaluate_theta(ThetaVector.from_mapping(5, {P((1,) * 5): 20}), self.system)
