"""Partner search for a fixed point carrying the biggest weight."""

from __future__ import annotations

import logging
from typing import List, Optional, Tuple

from src.errors import NotRealizableError
from src.models.fixed_point import FixedPoint, FixedPointData, Sign
from src.models.reduction import PartnerCase, PartnerKind

logger = logging.getLogger(__name__)


def _completes_summand(rest: FixedPointData, sign: Sign, x: int, y: int, top: int) -> bool:
    """True if the two points OP2 would add already occur in `rest` with flipped signs."""

    low, high = min(x, y), max(x, y)
    counterparts = [
        FixedPoint(-sign, (low, high - low, top - low)),
        FixedPoint(sign, (high, high - low, top - high)),
    ]
    return rest.contains_all(counterparts)


def _candidates(p: FixedPoint, top: int) -> List[Tuple[PartnerKind, FixedPoint, Optional[int], Optional[int]]]:
    eps = p.sign
    x, y = p.weights[1], p.weights[2]
    return [
        (PartnerKind.SAME, FixedPoint(-eps, (top, x, y)), None, None),
        (PartnerKind.COMPLEMENT, FixedPoint(-eps, (top, top - x, top - y)), None, None),
        (PartnerKind.MIXED, FixedPoint(eps, (top, x, top - y)), x, y),
        (PartnerKind.MIXED, FixedPoint(eps, (top, top - x, y)), y, x),
    ]


def find_partner(
    data: FixedPointData,
    p: FixedPoint,
    l: int,
    prefer_whole_summand: bool = True,
) -> PartnerCase:
    """Find the point p can be removed with.

    If p carries l twice the partner is {-eps, l, l, a}. Otherwise, with
    p = {eps, l, x, y}, the candidates are tried in the order {-eps, l, x, y},
    {-eps, l, l-x, l-y}, {eps, l, x, l-y}, {eps, l, l-x, y}.

    When x + y = l the first two candidates coincide. The partner is then
    reported as COMPLEMENT if the rest of the data already holds the mirror of
    what OP2 would add, and as SAME otherwise.
    """

    if p not in data:
        raise NotRealizableError(f"fixed point {{{p}}} is not part of the data")
    multiplicity = p.weight_count(l)
    if multiplicity == 0:
        raise NotRealizableError(f"fixed point {{{p}}} does not carry weight {l}")
    if multiplicity == 3:
        raise NotRealizableError(f"fixed point {{{p}}} carries {l} three times")

    rest = data.without([p])
    if multiplicity == 2:
        partner = FixedPoint(-p.sign, (l, l, p.weights[2]))
        if partner in rest:
            return PartnerCase(PartnerKind.SAME, partner)
        raise NotRealizableError(f"no partner {{{partner}}} for {{{p}}}")

    x, y = p.weights[1], p.weights[2]
    for kind, partner, shared, complemented in _candidates(p, l):
        if partner not in rest:
            continue
        if kind is PartnerKind.SAME and x != y and x + y == l and prefer_whole_summand:
            if _completes_summand(rest.without([partner]), p.sign, x, y, l):
                logger.debug("Partner %s of %s closes a CP3 summand", partner, p)
                return PartnerCase(PartnerKind.COMPLEMENT, partner)
        return PartnerCase(kind, partner, shared, complemented)

    raise NotRealizableError(f"no partner for {{{p}}} with biggest weight {l}")
