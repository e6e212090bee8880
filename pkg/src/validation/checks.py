"""Necessary conditions for fixed point data to come from a circle action on a 6-manifold."""

from __future__ import annotations

import logging
from collections import Counter
from typing import Callable, List, Tuple

from src.fpdata import max_weight, min_weight, normalize_effective
from src.models.fixed_point import FixedPoint, FixedPointData, Sign
from src.models.report import NOT_APPLICABLE, CheckResult, ValidationReport
from src.symbolic import reduced_signature_poly

logger = logging.getLogger(__name__)


def _sign_balance(data: FixedPointData) -> CheckResult:
    plus = sum(1 for point in data if point.sign is Sign.PLUS)
    minus = len(data) - plus
    return CheckResult("sign_balance", plus == minus, f"{plus} positive, {minus} negative")


def _weight_parity(data: FixedPointData) -> CheckResult:
    counts = Counter(data.weights())
    odd = sorted(weight for weight, count in counts.items() if count % 2)
    if odd:
        listed = ", ".join(f"{weight} ({counts[weight]}x)" for weight in odd)
        return CheckResult("weight_parity", False, f"odd total multiplicity: {listed}")
    return CheckResult("weight_parity", True, "every weight occurs an even number of times")


def _smallest_weight_balance(data: FixedPointData) -> CheckResult:
    if not data:
        return CheckResult("smallest_weight_balance", True, NOT_APPLICABLE)
    smallest = min_weight(data)
    plus = sum(point.weight_count(smallest) for point in data if point.sign is Sign.PLUS)
    minus = sum(point.weight_count(smallest) for point in data if point.sign is Sign.MINUS)
    return CheckResult(
        "smallest_weight_balance",
        plus == minus,
        f"weight {smallest}: {plus} on positive points, {minus} on negative points",
    )


def _top_weight_double(data: FixedPointData) -> CheckResult:
    if not data or max_weight(data) <= 1:
        return CheckResult("top_weight_double", True, NOT_APPLICABLE)
    top = max_weight(data)
    triple = [point for point in data if point.weight_count(top) == 3]
    if triple:
        return CheckResult("top_weight_double", False, f"fixed point {{{triple[0]}}} carries {top} three times")

    balance: Counter = Counter()
    for point in data:
        if point.weight_count(top) == 2:
            balance[point.weights[2]] += int(point.sign)
    unmatched = sorted(third for third, total in balance.items() if total)
    if unmatched:
        listed = ", ".join(f"{{{top},{top},{third}}}" for third in unmatched)
        return CheckResult("top_weight_double", False, f"unbalanced signs for {listed}")
    return CheckResult("top_weight_double", True, f"points with weight {top} twice are paired")


def _signature_zero(data: FixedPointData) -> CheckResult:
    polynomial = reduced_signature_poly(data)
    if polynomial.is_zero():
        return CheckResult("signature_zero", True, "signature identity vanishes")
    return CheckResult(
        "signature_zero", False, f"signature identity is nonzero (degree {polynomial.degree})"
    )


def _two_points(data: FixedPointData) -> CheckResult:
    if len(data) != 2:
        return CheckResult("two_points", True, NOT_APPLICABLE)
    first, second = data.points
    if first.weights != second.weights:
        return CheckResult("two_points", False, "the two fixed points have different weights")
    if first.sign == second.sign:
        return CheckResult("two_points", False, "the two fixed points have the same sign")
    return CheckResult("two_points", True, "equal weights, opposite signs")


_BIGGEST_TWO_SHAPES: Tuple[Tuple[int, int, int], ...] = ((1, 1, 1), (2, 1, 1), (2, 2, 1))


def _biggest_weight_two(data: FixedPointData) -> CheckResult:
    if not data or max_weight(data) != 2:
        return CheckResult("biggest_weight_two", True, NOT_APPLICABLE)
    counts = data.counter()
    for weights in _BIGGEST_TWO_SHAPES:
        plus = counts[FixedPoint(Sign.PLUS, weights)]
        minus = counts[FixedPoint(Sign.MINUS, weights)]
        if plus != minus:
            shape = ",".join(str(weight) for weight in weights)
            return CheckResult("biggest_weight_two", False, f"{{{shape}}}: {plus} positive vs {minus} negative")
    return CheckResult("biggest_weight_two", True, "counts agree for every shape")


def check_sign_balance(data: FixedPointData) -> bool:
    return _sign_balance(data).passed


def check_weight_parity(data: FixedPointData) -> bool:
    return _weight_parity(data).passed


def check_smallest_weight_balance(data: FixedPointData) -> bool:
    return _smallest_weight_balance(data).passed


def check_top_weight_double(data: FixedPointData) -> bool:
    """Points with the biggest weight twice must pair up with opposite signs.

    Expects effective data; vacuous when the biggest weight is 1.
    """

    return _top_weight_double(data).passed


def check_signature_zero(data: FixedPointData) -> bool:
    return _signature_zero(data).passed


def check_two_points(data: FixedPointData) -> bool:
    return _two_points(data).passed


def check_biggest_weight_two(data: FixedPointData) -> bool:
    """With biggest weight 2 the shapes {1,1,1}, {2,1,1}, {2,2,1} balance by sign."""

    return _biggest_weight_two(data).passed


CHECKS: List[Callable[[FixedPointData], CheckResult]] = [
    _sign_balance,
    _weight_parity,
    _smallest_weight_balance,
    _top_weight_double,
    _signature_zero,
    _two_points,
    _biggest_weight_two,
]


def validate_all(data: FixedPointData) -> ValidationReport:
    """Normalize to an effective action and run every check in a fixed order."""

    divisor = 1
    if data:
        data, divisor = normalize_effective(data)
    results = [check(data) for check in CHECKS]
    report = ValidationReport(checks=results, divisor=divisor)
    if not report.overall:
        logger.debug("Validation failed: %s", ", ".join(check.name for check in report.failures))
    return report
