"""
Vector θ_B: cantidad de pares ordenados cuya diferencia cae en cada clase.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Tuple, Union

from django.core.exceptions import ValidationError

from symmetric.partitions import Partition, enumerate_partitions

Number = Union[int, Fraction]


@dataclass(frozen=True)
class ThetaVector:
    """
    Valor racional exacto por clase de conjugación de S_d.

    Las entradas se guardan en el orden canónico de particiones; las clases
    ausentes valen cero.
    """

    d: int
    entries: Tuple[Tuple[Partition, Fraction], ...]
    has_duplicates: bool = False

    def __post_init__(self):
        for cycle_type, _ in self.entries:
            if cycle_type.d != self.d:
                raise ValidationError(f"La clase {cycle_type} no es de S_{self.d}")

    @classmethod
    def from_mapping(cls, d: int, values: Mapping[Partition, Number], has_duplicates: bool = False) -> 'ThetaVector':
        unknown = [c for c in values if c.d != d]
        if unknown:
            raise ValidationError(f"Clases ajenas a S_{d}: {', '.join(str(c) for c in unknown)}")
        ordered = tuple(
            (cycle_type, Fraction(values[cycle_type]))
            for cycle_type in enumerate_partitions(d)
            if cycle_type in values
        )
        return cls(d=d, entries=ordered, has_duplicates=has_duplicates)

    def as_dict(self) -> Dict[Partition, Fraction]:
        return dict(self.entries)

    def get(self, cycle_type: Partition) -> Fraction:
        for key, value in self.entries:
            if key == cycle_type:
                return value
        return Fraction(0)

    def __iter__(self) -> Iterator[Tuple[Partition, Fraction]]:
        return iter(self.entries)

    @property
    def identity_entry(self) -> Fraction:
        return self.get(Partition.identity(self.d))

    def support(self) -> Tuple[Partition, ...]:
        return tuple(c for c, value in self.entries if value != 0)

    def total(self) -> Fraction:
        """Σ_C θ_C, igual a Σ_g θ(g)/γ(g); vale |B|² para un θ_B genuino."""
        return sum((value for _, value in self.entries), Fraction(0))

    def with_entry(self, cycle_type: Partition, value: Number) -> 'ThetaVector':
        values = self.as_dict()
        values[cycle_type] = Fraction(value)
        return ThetaVector.from_mapping(self.d, values, self.has_duplicates)

