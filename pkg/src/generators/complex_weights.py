"""Conversion from complex tangent weights to real fixed point data."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

from src.errors import ZeroWeightError
from src.models.fixed_point import FixedPoint, FixedPointData, Sign


@dataclass(frozen=True)
class ComplexWeights:
    """Weights of the tangent space at a fixed point as complex S^1-representations."""

    values: Tuple[int, int, int]

    def __post_init__(self) -> None:
        values = tuple(int(value) for value in self.values)
        if len(values) != 3:
            raise ValueError(f"expected three complex weights, got {len(values)}")
        if any(value == 0 for value in values):
            raise ZeroWeightError(f"complex weights must be nonzero: {values}")
        object.__setattr__(self, "values", values)


def complex_to_real(weights: ComplexWeights) -> FixedPoint:
    """Forget the complex structure: sign is (-1)^(number of negative weights)."""

    negatives = sum(1 for value in weights.values if value < 0)
    sign = Sign.MINUS if negatives % 2 else Sign.PLUS
    return FixedPoint(sign, tuple(abs(value) for value in weights.values))


def complex_data_to_real(triples: Iterable[Tuple[int, int, int]]) -> FixedPointData:
    return FixedPointData.of(complex_to_real(ComplexWeights(triple)) for triple in triples)
