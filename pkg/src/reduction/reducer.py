"""Greedy elimination of the biggest weight, one connected sum at a time."""

from __future__ import annotations

import logging
from typing import List, Tuple

from src.errors import EmptyDataError, InvalidInputError, MaxStepsExceededError, NotRealizableError
from src.fpdata import divide_weights, max_weight, normalize_effective, overall_gcd, total_weight
from src.models.fixed_point import FixedPoint, FixedPointData
from src.models.reduction import (
    CobordismCertificate,
    OperationKind,
    PartnerCase,
    PartnerKind,
    ReductionStep,
)
from src.reduction.operations import apply_operation, build_step
from src.reduction.partners import find_partner
from src.validation import validate_all

logger = logging.getLogger(__name__)

DEFAULT_STEP_CAP_FACTOR = 4


def select_top_point(data: FixedPointData, l: int) -> FixedPoint:
    """First point carrying l, by descending weights and then + before -."""

    return min((point for point in data if point.weight_count(l)), key=FixedPoint.weights_first_key)


def _pair_step(p: FixedPoint) -> ReductionStep:
    return build_step(OperationKind.OP1, p.sign, tuple(sorted(p.weights)))


def _dispatch(p: FixedPoint, case: PartnerCase, l: int) -> ReductionStep:
    eps = p.sign
    x, y = p.weights[1], p.weights[2]

    if case.kind is PartnerKind.SAME:
        return _pair_step(p)

    if case.kind is PartnerKind.COMPLEMENT:
        if x != y:
            return build_step(OperationKind.OP2, eps, (y, x, l))
        if 2 * x < l:
            return build_step(OperationKind.OP5, eps, (x, l))
        return build_step(OperationKind.OP5, -eps, (l - x, l))

    shared, complemented = case.shared, case.complemented
    if shared < complemented:
        return build_step(OperationKind.OP3, eps, (shared, complemented, l))
    if complemented < shared:
        return build_step(OperationKind.OP3P, eps, (shared, complemented, l))
    if 2 * shared < l:
        return build_step(OperationKind.OP4, eps, (shared, l))
    if 2 * shared > l:
        return build_step(OperationKind.OP4P, eps, (shared, l))
    raise NotRealizableError(f"{{{p}}} pairs only with a copy of itself while {l} = 2 * {shared}")


def choose_step(data: FixedPointData, prefer_whole_summand: bool = True) -> ReductionStep:
    """Pick the next step on effective data without applying it."""

    l = max_weight(data)
    p = select_top_point(data, l)
    if l > 1 and p.weight_count(l) == 3:
        raise NotRealizableError(f"fixed point {{{p}}} carries the biggest weight three times")

    if l <= 2:
        if p.flipped() not in data:
            raise NotRealizableError(f"no fixed point {{{p.flipped()}}} to cancel {{{p}}}")
        return _pair_step(p)

    case = find_partner(data, p, l, prefer_whole_summand=prefer_whole_summand)
    return _dispatch(p, case, l)


def reduce_once(
    data: FixedPointData, prefer_whole_summand: bool = True
) -> Tuple[FixedPointData, ReductionStep]:
    """Apply one step that removes two points carrying the biggest weight.

    Non-effective data is reduced through its quotient and the step is
    scaled back, so the returned step applies to `data` itself.
    """

    if not data:
        raise EmptyDataError("nothing left to reduce")
    divisor = overall_gcd(data)
    if divisor > 1:
        step = choose_step(divide_weights(data, divisor), prefer_whole_summand).scaled(divisor)
    else:
        step = choose_step(data, prefer_whole_summand)
    return apply_operation(data, step), step


def reduce_to_empty(
    data: FixedPointData,
    step_cap_factor: int = DEFAULT_STEP_CAP_FACTOR,
    prefer_whole_summand: bool = True,
) -> CobordismCertificate:
    """Validate, normalize and reduce `data` to nothing, recording every step."""

    report = validate_all(data)
    if not report.overall:
        failed = ", ".join(check.name for check in report.failures)
        raise InvalidInputError(f"data fails validation: {failed}", report=report)
    if not data:
        return CobordismCertificate(initial=data, steps=(), effectiveness_divisor=1)

    state, divisor = normalize_effective(data)
    cap = step_cap_factor * total_weight(state)
    steps: List[ReductionStep] = []
    while state:
        if len(steps) >= cap:
            raise MaxStepsExceededError(f"reduction did not finish within {cap} steps")
        state, step = reduce_once(state, prefer_whole_summand=prefer_whole_summand)
        steps.append(step)
        logger.debug("Step %d: %s (%d points left)", len(steps), step, len(state))

    logger.info("Reduced %d fixed points in %d steps", len(data), len(steps))
    return CobordismCertificate(initial=data, steps=tuple(steps), effectiveness_divisor=divisor)
