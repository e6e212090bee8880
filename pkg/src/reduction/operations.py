"""The seven reduction operations, each a connected sum with a model manifold.

Every operation removes two points carrying the top weight C and adds points
whose weights are all strictly smaller than C. `sign` is the value of the
upper sign in the templates below; the lower sign is its negation.

    OP1   (A,B,C)        remove {s,A,B,C} {-s,A,B,C}
    OP2   A<B<C          remove {s,A,B,C} {-s,C-A,C-B,C}
    OP3   A<B<C          remove {s,A,B,C} {s,A,C-B,C}
    OP3P  B<A<C          remove {s,A,B,C} {s,A,C-B,C}
    OP4   2A<C           remove {s,A,A,C} {s,A,C-A,C}
    OP4P  A<C<2A         remove {s,A,A,C} {s,A,C-A,C}
    OP5   2A<C           remove {s,C,A,A} {-s,C,C-A,C-A}
"""

from __future__ import annotations

import logging
from typing import Callable, Dict, List, Sequence, Tuple

from src.errors import NotApplicableError, PairNotPresentError
from src.models.fixed_point import FixedPoint, FixedPointData, Sign
from src.models.reduction import GeneratorFamily, GeneratorLabel, OperationKind, ReductionStep

logger = logging.getLogger(__name__)

Template = Tuple[List[FixedPoint], List[FixedPoint]]

_PARAM_COUNTS = {
    OperationKind.OP1: 3,
    OperationKind.OP2: 3,
    OperationKind.OP3: 3,
    OperationKind.OP3P: 3,
    OperationKind.OP4: 2,
    OperationKind.OP4P: 2,
    OperationKind.OP5: 2,
}


def _pt(sign: Sign, *weights: int) -> FixedPoint:
    return FixedPoint(sign, weights)


def _op1(s: Sign, params: Sequence[int]) -> Template:
    a, b, c = params
    return [_pt(s, a, b, c), _pt(-s, a, b, c)], []


def _op2(s: Sign, params: Sequence[int]) -> Template:
    a, b, c = params
    removed = [_pt(s, a, b, c), _pt(-s, c - a, c - b, c)]
    added = [_pt(s, a, b - a, c - a), _pt(-s, b, b - a, c - b)]
    return removed, added


def _op3(s: Sign, params: Sequence[int]) -> Template:
    a, b, c = params
    removed = [_pt(s, a, b, c), _pt(s, a, c - b, c)]
    added = [
        _pt(s, c - b, c - a, a),
        _pt(s, c - b, b, a),
        _pt(-s, c - b, b - a, a),
        _pt(s, c - a, b - a, a),
    ]
    return removed, added


def _op3p(s: Sign, params: Sequence[int]) -> Template:
    a, b, c = params
    removed = [_pt(s, a, b, c), _pt(s, a, c - b, c)]
    added = [
        _pt(s, c - b, c - a, a),
        _pt(s, c - b, b, a),
        _pt(s, c - b, a - b, a),
        _pt(-s, c - a, a - b, a),
    ]
    return removed, added


def _op4(s: Sign, params: Sequence[int]) -> Template:
    a, c = params
    removed = [_pt(s, a, a, c), _pt(s, a, c - a, c)]
    added = [
        _pt(s, c - a, c - 2 * a, a),
        _pt(s, c - a, a, a),
        _pt(s, c - a, a, a),
        _pt(-s, c - 2 * a, a, a),
    ]
    return removed, added


def _op4p(s: Sign, params: Sequence[int]) -> Template:
    a, c = params
    removed = [_pt(s, a, a, c), _pt(s, a, c - a, c)]
    added = [
        _pt(-s, c - a, 2 * a - c, a),
        _pt(s, c - a, a, a),
        _pt(s, c - a, a, a),
        _pt(s, 2 * a - c, a, a),
    ]
    return removed, added


def _op5(s: Sign, params: Sequence[int]) -> Template:
    a, c = params
    removed = [_pt(s, c, a, a), _pt(-s, c, c - a, c - a)]
    added = [
        _pt(s, c - a, c - 2 * a, a),
        _pt(s, c - a, a, a),
        _pt(s, c - a, a, a),
        _pt(-s, c - 2 * a, a, a),
        _pt(s, a, c - 2 * a, c - a),
        _pt(-s, a, c - a, c - a),
        _pt(-s, a, c - a, c - a),
        _pt(-s, c - 2 * a, c - a, c - a),
    ]
    return removed, added


_TEMPLATES: Dict[OperationKind, Callable[[Sign, Sequence[int]], Template]] = {
    OperationKind.OP1: _op1,
    OperationKind.OP2: _op2,
    OperationKind.OP3: _op3,
    OperationKind.OP3P: _op3p,
    OperationKind.OP4: _op4,
    OperationKind.OP4P: _op4p,
    OperationKind.OP5: _op5,
}


def check_side_conditions(kind: OperationKind, params: Sequence[int]) -> None:
    """Raise NotApplicableError unless `params` satisfy the operation's inequalities."""

    if len(params) != _PARAM_COUNTS[kind]:
        raise NotApplicableError(f"{kind.value} takes {_PARAM_COUNTS[kind]} parameters, got {len(params)}")
    if min(params) < 1:
        raise NotApplicableError(f"{kind.value} parameters must be positive: {tuple(params)}")

    if kind is OperationKind.OP1:
        ok = list(params) == sorted(params)
    elif kind in (OperationKind.OP2, OperationKind.OP3):
        a, b, c = params
        ok = a < b < c
    elif kind is OperationKind.OP3P:
        a, b, c = params
        ok = b < a < c
    elif kind in (OperationKind.OP4, OperationKind.OP5):
        a, c = params
        ok = 2 * a < c
    else:
        a, c = params
        ok = a < c < 2 * a
    if not ok:
        raise NotApplicableError(f"{kind.value} side conditions fail for {tuple(params)}")


def generator_for(kind: OperationKind, sign: Sign, params: Sequence[int]) -> GeneratorLabel:
    """Model manifold whose connected sum realizes the operation.

    The generator carries the removed points with flipped signs, so it is
    reversed exactly when the upper sign is +. S^6 is its own reverse.
    """

    reversed_ = sign is Sign.PLUS
    if kind is OperationKind.OP1:
        return GeneratorLabel(GeneratorFamily.S6, tuple(params), False)
    if kind is OperationKind.OP2:
        return GeneratorLabel(GeneratorFamily.CP3, tuple(params), reversed_)
    if kind in (OperationKind.OP3, OperationKind.OP3P):
        a, b, c = params
        return GeneratorLabel(GeneratorFamily.Z1, (c, b, a), reversed_)
    a, c = params
    if kind in (OperationKind.OP4, OperationKind.OP4P):
        return GeneratorLabel(GeneratorFamily.Z2, (c, a, a), reversed_)
    return GeneratorLabel(GeneratorFamily.Z2SUM, (c, a), reversed_)


def operation_template(kind: OperationKind, sign: Sign, params: Sequence[int]) -> Template:
    check_side_conditions(kind, params)
    return _TEMPLATES[kind](Sign(sign), tuple(params))


def build_step(kind: OperationKind, sign: Sign, params: Sequence[int]) -> ReductionStep:
    """Instantiate an operation; raises NotApplicableError on violated side conditions."""

    kind = OperationKind(kind)
    sign = Sign(sign)
    removed, added = operation_template(kind, sign, params)
    return ReductionStep(
        kind=kind,
        sign=sign,
        params=tuple(params),
        removed=tuple(removed),
        added=tuple(added),
        generator=generator_for(kind, sign, params),
    )


def apply_operation(data: FixedPointData, step: ReductionStep) -> FixedPointData:
    """Replace the step's removed points by its added points.

    The step must agree with its operation's template, and its removed
    points must be present with multiplicity.
    """

    expected = build_step(step.kind, step.sign, step.params)
    if expected.removed != step.removed or expected.added != step.added:
        raise NotApplicableError(f"step does not match the {step.kind.value} template: {step}")
    try:
        remaining = data.without(step.removed)
    except PairNotPresentError as exc:
        raise NotApplicableError(f"{step.kind.value} cannot remove its points: {exc}") from exc
    return remaining.with_points(step.added)
