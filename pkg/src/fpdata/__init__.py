"""Elementary operations on fixed point data."""

from .transforms import (
    divide_weights,
    max_weight,
    min_weight,
    normalize_effective,
    overall_gcd,
    reverse_orientation,
    total_weight,
    weight_count,
)

__all__ = [
    "divide_weights",
    "max_weight",
    "min_weight",
    "normalize_effective",
    "overall_gcd",
    "reverse_orientation",
    "total_weight",
    "weight_count",
]
