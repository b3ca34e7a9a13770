"""
Pruebas para los cuerpos finitos, los planos afines y la proposición de no
negatividad.
"""

import math

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase
from hypothesis import given, settings as hypothesis_settings, strategies as st

from characters.tables import character_table
from delsarte.system import NONNEGATIVITY, build_system, evaluate_theta
from planes.fields import SUPPORTED_ORDERS, finite_field
from planes.services import (
    build_plane, proposition_check, random_subset, theta_of_subset,
)
from symmetric.partitions import Partition, class_info
from symmetric.permutations import Permutation, difference
from tests.utils import order_six_witness

P = Partition


class FiniteFieldTest(SimpleTestCase):
    """Pruebas para las tablas de GF(q)."""

    def test_supported_orders(self):
        """Prueba los órdenes de cuerpo admitidos."""
        self.assertEqual(SUPPORTED_ORDERS, (2, 3, 4, 5, 7, 8, 9))

    def test_multiplicative_group_is_cyclic(self):
        """Un elemento primitivo genera los q - 1 elementos no nulos."""
        for q in SUPPORTED_ORDERS:
            field = finite_field(q)
            g = field.primitive_element()
            self.assertEqual(field.multiplicative_order(g), q - 1)
            powers, power = set(), 1
            for _ in range(q - 1):
                power = field.mul(power, g)
                powers.add(power)
            self.assertEqual(powers, set(range(1, q)))

    def test_extension_fields(self):
        """x² = x + 1 en GF(4), x³ = x + 1 en GF(8) y x² = -1 en GF(9)."""
        self.assertEqual(finite_field(4).mul(2, 2), 3)
        gf8 = finite_field(8)
        self.assertEqual(gf8.mul(2, gf8.mul(2, 2)), 3)
        self.assertEqual(finite_field(9).mul(3, 3), 2)

    def test_characteristic(self):
        """Prueba la característica de GF(8) y GF(9)."""
        self.assertEqual(finite_field(8).add(5, 5), 0)
        self.assertEqual(finite_field(9).add(finite_field(9).add(4, 4), 4), 0)

    def test_inverse(self):
        """Prueba los inversos multiplicativos."""
        field = finite_field(7)
        self.assertEqual(field.inverse(3), 5)
        self.assertIsNone(field.inverse(0))
        with self.assertRaises(ValidationError):
            field.multiplicative_order(0)

    def test_unsupported_order(self):
        """Prueba que se rechazan órdenes sin cuerpo."""
        for q in (1, 6, 10, 11):
            with self.assertRaises(ValidationError):
                finite_field(q)


class BuildPlaneTest(SimpleTestCase):
    """Pruebas para build_plane."""

    def test_order_two(self):
        """Dos rectas: la identidad y la transposición (0 1)."""
        plane = build_plane(2)
        self.assertEqual(plane.lines, (Permutation.identity(2), Permutation((1, 0))))

    def test_line_counts_and_intersections(self):
        """Prueba el número de rectas y de clases paralelas."""
        for q in SUPPORTED_ORDERS:
            plane = build_plane(q)
            self.assertEqual(len(plane.lines), (q - 1) * q)
            self.assertEqual(len(set(plane.lines)), (q - 1) * q)
            groups = plane.parallel_classes()
            self.assertEqual(len(groups), q - 1)
            self.assertTrue(all(len(group) == q for group in groups))

    def test_pairwise_fixed_points(self):
        """Paralelas: sin puntos comunes; no paralelas: exactamente uno."""
        for q in (4, 5):
            plane = build_plane(q)
            for k, group in enumerate(plane.parallel_classes()):
                for other_k, other in enumerate(plane.parallel_classes()):
                    for p in group:
                        for r in other:
                            if p == r:
                                continue
                            expected = 0 if k == other_k else 1
                            self.assertEqual(difference(p, r).fixed_points(), expected)

    def test_unsupported_order(self):
        """Prueba que d = 6 no tiene plano construible."""
        with self.assertRaises(ValidationError):
            build_plane(6)


class ThetaOfSubsetTest(SimpleTestCase):
    """Pruebas para theta_of_subset."""

    def test_planes_satisfy_their_systems(self):
        """θ de cada plano construido no viola ninguna restricción."""
        for q in SUPPORTED_ORDERS:
            theta = theta_of_subset(build_plane(q).lines)
            self.assertEqual(theta.total(), ((q - 1) * q) ** 2)
            violations = evaluate_theta(theta, build_system(q, even_constraints=True))
            self.assertEqual(violations, [], f"q={q}")

    def test_order_five_entries(self):
        """Traslaciones: 5-ciclos; razones -1: [2,2,1]; razones de orden 4: [4,1]."""
        theta = theta_of_subset(build_plane(5).lines)
        self.assertEqual(theta.get(P((5,))), 80)
        self.assertEqual(theta.get(P((2, 2, 1))), 100)
        self.assertEqual(theta.get(P((4, 1))), 200)
        self.assertEqual(theta.identity_entry, 20)

    def test_identity_only(self):
        """Prueba θ de la identidad sola."""
        theta = theta_of_subset([Permutation.identity(4)])
        self.assertEqual(theta.as_dict(), {P.identity(4): 1})
        self.assertFalse(theta.has_duplicates)

    def test_repeated_identity(self):
        """B = n copias de e: θ(e) = n² y S_χ = n²·dim χ."""
        n = 3
        theta = theta_of_subset([Permutation.identity(5)] * n)
        self.assertTrue(theta.has_duplicates)
        self.assertEqual(theta.identity_entry, n * n)
        table = character_table(5)
        for product in proposition_check(theta, table):
            self.assertEqual(product.value, n * n * table.dimension(product.irrep))

    def test_full_group(self):
        """B = S_3 completo: θ_C = |B|·|C|."""
        theta = theta_of_subset(random_subset(3, 6, seed=7))
        for cycle_type, value in theta:
            self.assertEqual(value, 6 * class_info(cycle_type).size)

    def test_invalid_subsets(self):
        """Prueba que se rechazan subconjuntos vacíos o mixtos."""
        with self.assertRaises(ValidationError):
            theta_of_subset([])
        with self.assertRaises(ValidationError):
            theta_of_subset([Permutation.identity(3), Permutation.identity(4)])


class PropositionTest(SimpleTestCase):
    """Pruebas para proposition_check: S_χ >= 0 para todo θ_B genuino."""

    def test_order_five_plane(self):
        """Prueba los 7 productos del plano de orden 5."""
        theta = theta_of_subset(build_plane(5).lines)
        products = proposition_check(theta, character_table(5))
        self.assertEqual(len(products), 7)
        self.assertTrue(all(p.value >= 0 for p in products))

    def test_order_six_witness(self):
        """El punto único de d = 6 con θ(e) = 30 da 11 productos no negativos."""
        products = proposition_check(order_six_witness(), character_table(6))
        self.assertEqual(len(products), 11)
        self.assertTrue(all(p.value >= 0 for p in products))

    def test_random_order_six_subset(self):
        """30 elementos al azar de S_6 cumplen la proposición pero no el sistema."""
        theta = theta_of_subset(random_subset(6, 30, seed=3))
        self.assertTrue(all(p.value >= 0 for p in proposition_check(theta, character_table(6))))
        self.assertNotEqual(evaluate_theta(theta, build_system(6)), [])

    def test_two_hundred_random_subsets(self):
        """Prueba 200 subconjuntos al azar de S_5."""
        table = character_table(5)
        for trial in range(200):
            subset = random_subset(5, 1 + trial % 20, seed=trial)
            products = proposition_check(theta_of_subset(subset), table)
            self.assertTrue(all(p.value >= 0 for p in products), f"ensayo {trial}")

    def test_lowering_a_zero_entry_breaks_the_system(self):
        """Prueba que bajar en 1 una entrada admitida nula de θ viola la proposición o la no negatividad."""
        perturbed_classes = 0
        for q in (2, 3, 4, 5, 7):
            theta = theta_of_subset(build_plane(q).lines)
            system = build_system(q)
            table = character_table(q)
            for cycle_type in system.variables:
                if theta.get(cycle_type) != 0:
                    continue
                perturbed = theta.with_entry(cycle_type, -1)
                negative_product = any(p.value < 0 for p in proposition_check(perturbed, table))
                kinds = {v.kind for v in evaluate_theta(perturbed, system)}
                self.assertTrue(negative_product or NONNEGATIVITY in kinds, f"q={q}, {cycle_type}")
                perturbed_classes += 1
        self.assertGreater(perturbed_classes, 0)

    def test_mismatched_orders(self):
        """Prueba que θ y tabla de órdenes distintos son un error."""
        with self.assertRaises(ValidationError):
            proposition_check(order_six_witness(), character_table(5))

    @hypothesis_settings(max_examples=50, deadline=None)
    @given(st.lists(st.permutations(range(5)), min_size=1, max_size=12))
    def test_any_subset_satisfies_proposition(self, images):
        """Prueba la proposición sobre subconjuntos arbitrarios."""
        subset = [Permutation(tuple(p)) for p in images]
        products = proposition_check(theta_of_subset(subset), character_table(5))
        self.assertTrue(all(p.value >= 0 for p in products))


class RandomSubsetTest(SimpleTestCase):
    """Pruebas para random_subset."""

    def test_reproducible_and_distinct(self):
        """Prueba la reproducibilidad con la misma semilla."""
        first = random_subset(5, 10, seed=1)
        self.assertEqual(first, random_subset(5, 10, seed=1))
        self.assertEqual(len(set(first)), 10)
        self.assertTrue(all(p.d == 5 for p in first))

    def test_full_group_is_all_permutations(self):
        """Prueba que n = d! devuelve todo S_d."""
        self.assertEqual(len(set(random_subset(4, math.factorial(4), seed=0))), 24)

    def test_too_many_elements(self):
        """Prueba que n > d! es un error de dominio."""
        with self.assertRaises(ValidationError):
            random_subset(3, 7, seed=1)

    def test_degree_out_of_range(self):
        """Prueba que se rechazan grados fuera de rango."""
        with self.assertRaises(ValidationError):
            random_subset(21, 1, seed=1)
