"""
Pruebas para la regla de Murnaghan-Nakayama y las tablas de caracteres.
"""

import math

import pytest
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from characters.murnaghan_nakayama import hook_lengths, irrep_dimension, mn_character, rim_hooks
from characters.serializers import table_to_csv
from characters.tables import character_table, sum_of_character_rows, validate_table
from symmetric.partitions import Partition, class_info, enumerate_partitions

P = Partition

# Columnas: e, (123)(456), (12)(34)(56), (1234)(56), (123456), (123)(45), (12345)
S6_CLASSES = [P((1,) * 6), P((3, 3)), P((2, 2, 2)), P((4, 2)), P((6,)), P((3, 2, 1)), P((5, 1))]
S6_ROWS = [
    (1, 1, 1, 1, 1, 1, 1),
    (1, 1, -1, 1, -1, -1, 1),
    (5, -1, -1, -1, -1, 0, 0),
    (5, -1, 1, -1, 1, 0, 0),
    (5, 2, 3, -1, 0, -1, 0),
    (5, 2, -3, -1, 0, 1, 0),
    (9, 0, 3, 1, 0, 0, -1),
    (9, 0, -3, 1, 0, 0, -1),
    (10, 1, 2, 0, -1, 1, 0),
    (10, 1, -2, 0, 1, -1, 0),
    (16, -2, 0, 0, 0, 0, 1),
]


class MurnaghanNakayamaTest(SimpleTestCase):
    """Pruebas para mn_character y sus auxiliares."""

    def test_trivial_and_sign_characters(self):
        """χ_[d] vale 1 y χ_[1^d] es el signo de la clase."""
        for cycle_type in enumerate_partitions(7):
            self.assertEqual(mn_character(P((7,)), cycle_type), 1)
            self.assertEqual(mn_character(P.identity(7), cycle_type), class_info(cycle_type).sign)

    def test_standard_character(self):
        """χ_[d-1,1] es (puntos fijos - 1)."""
        for cycle_type in enumerate_partitions(6):
            self.assertEqual(mn_character(P((5, 1)), cycle_type), cycle_type.fixed_points() - 1)

    def test_known_values(self):
        """Prueba valores conocidos de la tabla de S_6."""
        self.assertEqual(mn_character(P((3, 3)), P((2, 2, 2))), -3)
        self.assertEqual(mn_character(P((3, 3)), P((3, 3))), 2)
        self.assertEqual(mn_character(P((4, 2)), P((2, 2, 2))), 3)

    def test_rim_hooks_heights(self):
        """Ganchos de longitud 2 de [3,3]: llegan a [2,2] (altura 1) y [3,1] (altura 0)."""
        hooks = dict(rim_hooks((3, 3), 2))
        self.assertEqual(hooks, {(2, 2): 1, (3, 1): 0})

    def test_size_mismatch(self):
        """Prueba que particiones de tamaños distintos son un error de dominio."""
        with self.assertRaises(ValidationError):
            mn_character(P((3, 1)), P((2, 2, 1)))

    def test_hook_length_formula(self):
        """Prueba la fórmula de ganchos."""
        self.assertEqual(sorted(hook_lengths(P((2, 1)))), [1, 1, 3])
        self.assertEqual(irrep_dimension(P((3, 2, 1))), 16)
        self.assertEqual(irrep_dimension(P((4, 2))), 9)
        self.assertEqual(irrep_dimension(P((5, 1))), 5)
        self.assertEqual(irrep_dimension(P.identity(6)), 1)


class CharacterTableTest(SimpleTestCase):
    """Pruebas para character_table y validate_table."""

    def test_order_two(self):
        """Tabla 2x2: filas [2] y [1,1], columnas [2] y [1,1]."""
        table = character_table(2)
        self.assertEqual(table.classes, (P((2,)), P((1, 1))))
        self.assertEqual(table.values, ((1, 1), (-1, 1)))

    def test_s6_rows_match_printed_table(self):
        """Las filas restringidas de S_6 coinciden con la tabla impresa de 11 caracteres."""
        table = character_table(6)
        rows = [table.restricted_row(irrep, S6_CLASSES) for irrep in table.irreps]
        self.assertEqual(sorted(rows), sorted(S6_ROWS))

    def test_s6_summed_row(self):
        """χ_[2,2,2] + χ_[4,2] + χ_[2,2,1,1] + χ_[4,1,1] restringida a las siete clases."""
        table = character_table(6)
        irreps = [P((2, 2, 2)), P((4, 2)), P((2, 2, 1, 1)), P((4, 1, 1))]
        self.assertEqual(
            sum_of_character_rows(table, irreps, S6_CLASSES),
            (33, 3, 1, 1, 1, -2, -2),
        )

    def test_tables_validate(self):
        """Prueba que las tablas de S_1 a S_10 pasan todas las verificaciones."""
        for d in range(1, 11):
            report = validate_table(character_table(d))
            self.assertTrue(report.passed, [c.detail for c in report.failures()])
            self.assertEqual(len(report.checks), 4)

    def test_perturbed_table_fails(self):
        """Una entrada alterada rompe la ortogonalidad."""
        table = character_table(5)
        perturbed = table.with_entry(P((3, 2)), P((2, 2, 1)), table.value(P((3, 2)), P((2, 2, 1))) + 1)
        report = validate_table(perturbed)
        self.assertFalse(report.passed)
        names = [check.name for check in report.failures()]
        self.assertIn('row_orthogonality', names)
        self.assertIn('column_orthogonality', names)

    def test_perturbed_dimension_fails_hook_check(self):
        """Prueba que una dimensión alterada falla la verificación de ganchos."""
        table = character_table(4)
        perturbed = table.with_entry(P((3, 1)), P.identity(4), 4)
        names = [check.name for check in validate_table(perturbed).failures()]
        self.assertIn('hook_length_dimensions', names)

    def test_row_and_column_accessors(self):
        """Prueba los accesos por fila, columna y dimensión."""
        table = character_table(4)
        self.assertEqual(table.row(P((4,))), (1,) * 5)
        self.assertEqual(table.column(P.identity(4)), (1, 3, 2, 3, 1))
        self.assertEqual(table.dimension(P((2, 2))), 2)
        self.assertEqual(sum(v * v for v in table.column(P.identity(4))), math.factorial(4))

    def test_degree_out_of_range(self):
        """Prueba que se rechazan órdenes fuera de rango."""
        for d in [0, 15]:
            with self.assertRaises(ValidationError):
                character_table(d)

    def test_csv_export(self):
        """Prueba la exportación CSV de la tabla de S_3."""
        csv_text = table_to_csv(character_table(3))
        lines = csv_text.splitlines()
        self.assertEqual(lines[0], ',[3],"[2,1]","[1,1,1]"')
        self.assertEqual(lines[1], '[3],1,1,1')
        self.assertEqual(len(lines), 4)

    @pytest.mark.slow
    def test_order_twelve(self):
        """S_12 tiene 77 clases y su tabla pasa la validación."""
        table = character_table(12)
        self.assertEqual(len(table.irreps), 77)
        self.assertTrue(validate_table(table).passed)
