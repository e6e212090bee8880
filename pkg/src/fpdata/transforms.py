"""Elementary transformations of fixed point data."""

from __future__ import annotations

import logging
from functools import reduce
from math import gcd
from typing import Tuple

from src.errors import EmptyDataError
from src.models.fixed_point import FixedPoint, FixedPointData

logger = logging.getLogger(__name__)


def _require_points(data: FixedPointData, operation: str) -> None:
    if not data:
        raise EmptyDataError(f"{operation} needs at least one fixed point")


def reverse_orientation(data: FixedPointData) -> FixedPointData:
    return FixedPointData.of(point.flipped() for point in data)


def overall_gcd(data: FixedPointData) -> int:
    _require_points(data, "overall_gcd")
    return reduce(gcd, data.weights())


def normalize_effective(data: FixedPointData) -> Tuple[FixedPointData, int]:
    """Divide every weight by the overall gcd, i.e. pass to the effective quotient action."""

    divisor = overall_gcd(data)
    if divisor == 1:
        return data, 1
    logger.debug("Dividing weights by %d to obtain an effective action", divisor)
    return divide_weights(data, divisor), divisor


def divide_weights(data: FixedPointData, divisor: int) -> FixedPointData:
    return FixedPointData.of(point.divided(divisor) for point in data)


def max_weight(data: FixedPointData) -> int:
    _require_points(data, "max_weight")
    return max(point.top for point in data)


def min_weight(data: FixedPointData) -> int:
    _require_points(data, "min_weight")
    return min(point.weights[-1] for point in data)


def weight_count(point: FixedPoint, weight: int) -> int:
    """Multiplicity of `weight` among the three weights of `point`."""

    return point.weight_count(weight)


def total_weight(data: FixedPointData) -> int:
    """Sum of all weights over all points."""

    return sum(data.weights())
