"""Equivariant connected sum at fixed points, on the level of fixed point data."""

from __future__ import annotations

import logging
from typing import Sequence, Tuple

from src.errors import PairNotPresentError, SignMismatchError, WeightMismatchError
from src.models.fixed_point import FixedPoint, FixedPointData

logger = logging.getLogger(__name__)

GluingPair = Tuple[FixedPoint, FixedPoint]


def connected_sum(
    m: FixedPointData, n: FixedPointData, pairs: Sequence[GluingPair]
) -> FixedPointData:
    """Glue m and n at each (p, q) pair; both points of a pair disappear.

    p is taken from m and q from n, with multiplicity across pairs. The two
    points of a pair must carry identical weights and opposite signs.
    """

    left = m.counter()
    right = n.counter()
    for p, q in pairs:
        if p.weights != q.weights:
            raise WeightMismatchError(f"cannot glue {{{p}}} to {{{q}}}: weights differ")
        if p.sign == q.sign:
            raise SignMismatchError(f"cannot glue {{{p}}} to {{{q}}}: signs agree")
        if left[p] <= 0:
            raise PairNotPresentError(f"fixed point {{{p}}} is not available in the first summand")
        if right[q] <= 0:
            raise PairNotPresentError(f"fixed point {{{q}}} is not available in the second summand")
        left[p] -= 1
        right[q] -= 1

    result = FixedPointData(tuple(left.elements()) + tuple(right.elements()))
    logger.debug("Connected sum of %d and %d points at %d pairs", len(m), len(n), len(pairs))
    return result
