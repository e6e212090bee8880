"""Fixed point data of the model manifolds S^6, CP^3, Z_n and Z_2 # reversed Z_2."""

from __future__ import annotations

import logging

from src.errors import DegenerateParametersError, NonPositiveWeightError, ParameterOrderError
from src.fpdata import reverse_orientation
from src.generators.complex_weights import complex_data_to_real
from src.generators.connected_sum import connected_sum
from src.models.fixed_point import FixedPoint, FixedPointData, Sign
from src.models.reduction import GeneratorFamily, GeneratorLabel

logger = logging.getLogger(__name__)


def gen_s6(a: int, b: int, c: int) -> FixedPointData:
    """Rotation of S^6 with weights a, b, c: two fixed points of opposite sign."""

    if min(a, b, c) < 1:
        raise NonPositiveWeightError(f"S6 weights must be positive: {(a, b, c)}")
    return FixedPointData((FixedPoint(Sign.PLUS, (a, b, c)), FixedPoint(Sign.MINUS, (a, b, c))))


def gen_cp3(a: int, b: int, c: int) -> FixedPointData:
    """CP^3 with the action of weights (0, a, b, c) on homogeneous coordinates.

    The tangent weights at the i-th coordinate point are a_j - a_i.
    """

    if not 0 < a < b < c:
        raise ParameterOrderError(f"CP3 needs 0 < a < b < c, got {(a, b, c)}")
    return complex_data_to_real(
        [
            (a, b, c),
            (-a, b - a, c - a),
            (-b, a - b, c - b),
            (-c, a - c, b - c),
        ]
    )


def gen_zn(n: int, a: int, b: int, c: int, experimental: bool = False) -> FixedPointData:
    """Six-dimensional analogue Z_n of the Hirzebruch surface, a hypersurface in CP^3 x CP^1."""

    if min(a, b, c) < 1:
        raise DegenerateParametersError(f"Z_n parameters must be positive: {(a, b, c)}")
    if n < 1:
        if not experimental:
            raise DegenerateParametersError(f"Z_n with n={n} is only built in experimental mode")
        logger.warning("Building Z_%d(%d,%d,%d) outside the tested range n >= 1", n, a, b, c)
    if b == a or n * c == a or n * c == b:
        raise DegenerateParametersError(
            f"Z_{n}({a},{b},{c}) needs b != a, nc != a and nc != b"
        )
    return complex_data_to_real(
        [
            (b - a, -a, c),
            (b - a, n * c - a, -c),
            (a - b, -b, c),
            (a - b, n * c - b, -c),
            (a, b, c),
            (a - n * c, b - n * c, -c),
        ]
    )


def gen_z2sum(a: int, e: int) -> FixedPointData:
    """Z_2(a,e,e) glued to reversed Z_2(a,a-e,a-e) at the point with weights {a, a-e, e}."""

    if not 0 < 2 * e < a:
        raise DegenerateParametersError(f"Z2 sum needs 0 < 2e < a, got a={a}, e={e}")
    first = gen_zn(2, a, e, e)
    second = reverse_orientation(gen_zn(2, a, a - e, a - e))
    gluing = (
        FixedPoint(Sign.PLUS, (a, a - e, e)),
        FixedPoint(Sign.MINUS, (a, a - e, e)),
    )
    return connected_sum(first, second, [gluing])


def generate(label: GeneratorLabel) -> FixedPointData:
    """Build the data a generator label names, reversed if the label says so."""

    params = label.params
    if label.family is GeneratorFamily.S6:
        data = gen_s6(*params)
    elif label.family is GeneratorFamily.CP3:
        data = gen_cp3(*params)
    elif label.family is GeneratorFamily.Z1:
        data = gen_zn(1, *params)
    elif label.family is GeneratorFamily.Z2:
        data = gen_zn(2, *params)
    else:
        data = gen_z2sum(*params)
    return reverse_orientation(data) if label.reversed else data
