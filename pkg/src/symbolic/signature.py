"""Signature identity for six-dimensional circle actions with isolated fixed points.

The signature of M equals the sum over fixed points of
eps(p) * prod_i (1 + t^w_i) / (1 - t^w_i), and vanishes in dimension 6.
Clearing denominators gives a polynomial that must be identically zero.
"""

from __future__ import annotations

import logging
from typing import Dict, Tuple

import numpy as np

from src.errors import EmptyDataError
from src.fpdata import total_weight
from src.models.fixed_point import FixedPointData
from src.symbolic.polynomial import (
    IntPolynomial,
    divide_one_minus,
    multiply_one_plus,
    product_one_minus,
)
from src.symbolic.series import TruncatedSeries

logger = logging.getLogger(__name__)


def _signed_sum(
    net_counts: Dict[Tuple[int, int, int], int], denominator: np.ndarray
) -> IntPolynomial:
    """Sum of count * prod(1 + t^w) * denominator / prod(1 - t^w) over weight triples."""

    total = np.zeros(len(denominator), dtype=object)
    for weights, count in net_counts.items():
        term = denominator
        for weight in weights:
            term = divide_one_minus(term, weight)
        for weight in weights:
            term = multiply_one_plus(term, weight)
        total[: len(term)] += count * term
    return IntPolynomial.from_array(total)


def _grouped_counts(data: FixedPointData) -> Dict[Tuple[int, int, int], int]:
    counts: Dict[Tuple[int, int, int], int] = {}
    for point in data:
        counts[point.weights] = counts.get(point.weights, 0) + int(point.sign)
    return counts


def signature_identity_poly(data: FixedPointData) -> IntPolynomial:
    """Cleared-denominator signature identity over every fixed point of `data`.

    Terms of points sharing a weight triple differ only by sign, so they are
    summed once per triple.
    """

    if not data:
        raise EmptyDataError("signature identity needs at least one fixed point")
    denominator = product_one_minus(data.weights())
    return _signed_sum(_grouped_counts(data), denominator)


def reduced_signature_poly(data: FixedPointData) -> IntPolynomial:
    """Same identity after discarding weight triples whose signed count is zero.

    The result times a nonzero polynomial is `signature_identity_poly(data)`,
    so both vanish together. Empty or fully cancelling data gives zero.
    """

    net = data.net_counts()
    if not net:
        return IntPolynomial()
    denominator = product_one_minus(weight for weights in net for weight in weights)
    logger.debug("Reduced signature identity over %d weight triples", len(net))
    return _signed_sum(net, denominator)


def signature_series(data: FixedPointData, n: int) -> TruncatedSeries:
    """Expand the signature sum as a power series up to t^n."""

    if not data:
        raise EmptyDataError("signature series needs at least one fixed point")
    if n < 0:
        raise ValueError(f"truncation degree must be non-negative, got {n}")
    total = TruncatedSeries.zero(n)
    for point in data:
        term = TruncatedSeries.one(n)
        for weight in point.weights:
            term = term * TruncatedSeries.geometric_ratio(weight, n)
        total = total + term.scaled(int(point.sign))
    return total


def series_vanishes(data: FixedPointData) -> bool:
    """Series oracle truncated at the total weight, which decides zero-ness exactly."""

    if not data:
        return True
    return signature_series(data, total_weight(data)).is_zero()
