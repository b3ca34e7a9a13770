"""
Tablas de suma y multiplicación de cuerpos finitos pequeños.

Para q primo se usa aritmética modular; para q = p^k con k > 1 los elementos
son polinomios de grado < k sobre GF(p), codificados en base p (el dígito i
es el coeficiente de x^i), reducidos módulo un polinomio irreducible fijo.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

from django.core.exceptions import ValidationError

from delsarte_planes.exceptions import InternalConsistencyError

logger = logging.getLogger(__name__)

PRIME_ORDERS = (2, 3, 5, 7)

# q -> (p, coeficientes del irreducible de menor a mayor grado)
IRREDUCIBLE_POLYNOMIALS = {
    4: (2, (1, 1, 1)),      # x² + x + 1
    8: (2, (1, 1, 0, 1)),   # x³ + x + 1
    9: (3, (1, 0, 1)),      # x² + 1
}

SUPPORTED_ORDERS = tuple(sorted(PRIME_ORDERS + tuple(IRREDUCIBLE_POLYNOMIALS)))

Table = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteFieldTable:
    """GF(q) con elementos 0..q-1; 0 y 1 son los neutros aditivo y multiplicativo."""

    q: int
    p: int
    addition: Table
    multiplication: Table

    @property
    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return self.addition[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.multiplication[a][b]

    def inverse(self, a: int) -> Optional[int]:
        return next((b for b in self.elements if self.mul(a, b) == 1), None)

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ValidationError("0 no tiene orden multiplicativo")
        order, power = 1, a
        while power != 1:
            power = self.mul(power, a)
            order += 1
        return order

    def primitive_element(self) -> int:
        """Menor generador del grupo multiplicativo (cíclico de orden q-1)."""
        return next(a for a in range(1, self.q) if self.multiplicative_order(a) == self.q - 1)


def _digits(value: int, p: int, k: int) -> list:
    digits = []
    for _ in range(k):
        value, digit = divmod(value, p)
        digits.append(digit)
    return digits


def _number(digits, p: int) -> int:
    return sum(d * p ** i for i, d in enumerate(digits))


def _poly_mul_mod(a: int, b: int, p: int, modulus: Tuple[int, ...]) -> int:
    k = len(modulus) - 1
    x, y = _digits(a, p, k), _digits(b, p, k)
    product = [0] * (2 * k - 1)
    for i, xi in enumerate(x):
        for j, yj in enumerate(y):
            product[i + j] = (product[i + j] + xi * yj) % p
    # el irreducible es mónico: x^k = -(términos de menor grado)
    for degree in range(len(product) - 1, k - 1, -1):
        coefficient = product[degree]
        if coefficient:
            for i, m in enumerate(modulus):
                product[degree - k + i] = (product[degree - k + i] - coefficient * m) % p
    return _number(product[:k], p)


def _poly_add(a: int, b: int, p: int, k: int) -> int:
    return _number([(x + y) % p for x, y in zip(_digits(a, p, k), _digits(b, p, k))], p)


def _verify_axioms(field: FiniteFieldTable) -> None:
    elements = field.elements
    for a in elements:
        if field.add(a, 0) != a or field.mul(a, 1) != a:
            raise InternalConsistencyError(f"GF({field.q}): neutros incorrectos en {a}")
        if a and field.inverse(a) is None:
            raise InternalConsistencyError(f"GF({field.q}): {a} no es invertible")
        for b in elements:
            if field.add(a, b) != field.add(b, a) or field.mul(a, b) != field.mul(b, a):
                raise InternalConsistencyError(f"GF({field.q}): no conmutativo en ({a}, {b})")
            for c in elements:
                if field.mul(field.mul(a, b), c) != field.mul(a, field.mul(b, c)):
                    raise InternalConsistencyError(f"GF({field.q}): producto no asociativo")
                if field.add(field.add(a, b), c) != field.add(a, field.add(b, c)):
                    raise InternalConsistencyError(f"GF({field.q}): suma no asociativa")
                if field.mul(a, field.add(b, c)) != field.add(field.mul(a, b), field.mul(a, c)):
                    raise InternalConsistencyError(f"GF({field.q}): no distributivo")


@lru_cache(maxsize=None)
def finite_field(q: int) -> FiniteFieldTable:
    """
    Construye y verifica las tablas de GF(q).

    Raises:
        ValidationError: Si q no es un orden soportado
        InternalConsistencyError: Si las tablas no cumplen los axiomas de cuerpo
    """
    if q in PRIME_ORDERS:
        p = q
        addition = tuple(tuple((a + b) % q for b in range(q)) for a in range(q))
        multiplication = tuple(tuple((a * b) % q for b in range(q)) for a in range(q))
    elif q in IRREDUCIBLE_POLYNOMIALS:
        p, modulus = IRREDUCIBLE_POLYNOMIALS[q]
        k = len(modulus) - 1
        addition = tuple(tuple(_poly_add(a, b, p, k) for b in range(q)) for a in range(q))
        multiplication = tuple(tuple(_poly_mul_mod(a, b, p, modulus) for b in range(q)) for a in range(q))
    else:
        raise ValidationError(f"Orden de cuerpo no soportado: {q}. Órdenes válidos: {list(SUPPORTED_ORDERS)}")

    field = FiniteFieldTable(q=q, p=p, addition=addition, multiplication=multiplication)
    _verify_axioms(field)
    logger.debug(f"GF({q}) construido y verificado")
    return field
