import logging

import pytest

from src.errors import DegenerateParametersError, NonPositiveWeightError, ParameterOrderError
from src.fpdata import reverse_orientation
from src.generators import connected_sum, gen_cp3, gen_s6, gen_z2sum, gen_zn, generate
from src.models.fixed_point import FixedPoint, FixedPointData, Sign
from src.models.reduction import GeneratorFamily, GeneratorLabel

PLUS, MINUS = Sign.PLUS, Sign.MINUS


def fpd(*rows):
    return FixedPointData.of(FixedPoint(sign, weights) for sign, *weights in rows)


@pytest.mark.parametrize(
    "params, expected",
    [
        ((1, 2, 3), fpd((PLUS, 3, 2, 1), (MINUS, 3, 2, 1))),
        ((1, 1, 1), fpd((PLUS, 1, 1, 1), (MINUS, 1, 1, 1))),
        ((2, 2, 5), fpd((PLUS, 5, 2, 2), (MINUS, 5, 2, 2))),
    ],
)
def test_gen_s6(params, expected) -> None:
    assert gen_s6(*params) == expected


def test_gen_s6_rejects_zero_weight() -> None:
    with pytest.raises(NonPositiveWeightError):
        gen_s6(0, 1, 2)


@pytest.mark.parametrize(
    "params, expected",
    [
        ((1, 2, 3), fpd((PLUS, 3, 2, 1), (MINUS, 2, 1, 1), (PLUS, 2, 1, 1), (MINUS, 3, 2, 1))),
        ((1, 2, 4), fpd((PLUS, 4, 2, 1), (MINUS, 3, 1, 1), (PLUS, 2, 2, 1), (MINUS, 4, 3, 2))),
        ((2, 3, 7), fpd((PLUS, 7, 3, 2), (MINUS, 5, 2, 1), (PLUS, 4, 3, 1), (MINUS, 7, 5, 4))),
    ],
)
def test_gen_cp3(params, expected) -> None:
    assert gen_cp3(*params) == expected


@pytest.mark.parametrize("params", [(2, 1, 3), (1, 1, 2), (0, 1, 2), (3, 2, 1)])
def test_gen_cp3_needs_increasing_parameters(params) -> None:
    with pytest.raises(ParameterOrderError):
        gen_cp3(*params)


@pytest.mark.parametrize(
    "params, expected",
    [
        (
            (1, 3, 2, 1),
            fpd(
                (PLUS, 3, 1, 1), (MINUS, 2, 1, 1), (MINUS, 2, 1, 1),
                (PLUS, 1, 1, 1), (PLUS, 3, 2, 1), (MINUS, 2, 1, 1),
            ),
        ),
        (
            (2, 5, 2, 2),
            fpd(
                (PLUS, 5, 3, 2), (MINUS, 3, 2, 1), (MINUS, 3, 2, 2),
                (MINUS, 3, 2, 2), (PLUS, 5, 2, 2), (PLUS, 2, 2, 1),
            ),
        ),
        (
            (2, 3, 2, 2),
            fpd(
                (PLUS, 3, 2, 1), (PLUS, 2, 1, 1), (MINUS, 2, 2, 1),
                (MINUS, 2, 2, 1), (PLUS, 3, 2, 2), (MINUS, 2, 2, 1),
            ),
        ),
    ],
)
def test_gen_zn(params, expected) -> None:
    assert gen_zn(*params) == expected


@pytest.mark.parametrize(
    "params",
    [(1, 2, 2, 1), (1, 3, 2, 3), (2, 4, 1, 2), (1, 0, 2, 1), (2, 2, 1, 1)],
)
def test_gen_zn_rejects_degenerate_parameters(params) -> None:
    with pytest.raises(DegenerateParametersError):
        gen_zn(*params)


def test_gen_zn_non_positive_n_needs_experimental_flag(caplog) -> None:
    with pytest.raises(DegenerateParametersError):
        gen_zn(-1, 3, 2, 1)

    with caplog.at_level(logging.WARNING, logger="src.generators.manifolds"):
        data = gen_zn(-1, 3, 2, 1, experimental=True)

    assert len(data) == 6
    assert "outside the tested range" in caplog.text


@pytest.mark.parametrize("a, b, c", [(3, 2, 1), (7, 4, 2), (9, 5, 3)])
def test_z1_table_when_a_above_b_above_c(a, b, c) -> None:
    expected = fpd(
        (PLUS, a - b, a, c),
        (MINUS, a - b, a - c, c),
        (MINUS, a - b, b, c),
        (PLUS, a - b, b - c, c),
        (PLUS, a, b, c),
        (MINUS, a - c, b - c, c),
    )

    assert gen_zn(1, a, b, c) == expected


@pytest.mark.parametrize("a, b, c", [(3, 1, 2), (7, 2, 5), (10, 3, 4)])
def test_z1_table_when_a_above_c_above_b(a, b, c) -> None:
    expected = fpd(
        (PLUS, a - b, a, c),
        (MINUS, a - b, a - c, c),
        (MINUS, a - b, b, c),
        (MINUS, a - b, c - b, c),
        (PLUS, a, b, c),
        (PLUS, a - c, c - b, c),
    )

    assert gen_zn(1, a, b, c) == expected


@pytest.mark.parametrize("a, d", [(5, 2), (3, 1), (9, 4)])
def test_z2_table_when_twice_d_below_a(a, d) -> None:
    expected = fpd(
        (PLUS, a - d, a, d),
        (MINUS, a - d, a - 2 * d, d),
        (MINUS, a - d, d, d),
        (MINUS, a - d, d, d),
        (PLUS, a, d, d),
        (PLUS, a - 2 * d, d, d),
    )

    assert gen_zn(2, a, d, d) == expected


@pytest.mark.parametrize("a, d", [(3, 2), (5, 3), (7, 4)])
def test_z2_table_when_d_below_a_below_twice_d(a, d) -> None:
    expected = fpd(
        (PLUS, a - d, a, d),
        (PLUS, a - d, 2 * d - a, d),
        (MINUS, a - d, d, d),
        (MINUS, a - d, d, d),
        (PLUS, a, d, d),
        (MINUS, 2 * d - a, d, d),
    )

    assert gen_zn(2, a, d, d) == expected


def _z2_sum_table(a: int, e: int) -> FixedPointData:
    return fpd(
        (MINUS, a - e, a - 2 * e, e),
        (MINUS, a - e, e, e),
        (MINUS, a - e, e, e),
        (PLUS, a, e, e),
        (PLUS, a - 2 * e, e, e),
        (MINUS, e, a - 2 * e, a - e),
        (PLUS, e, a - e, a - e),
        (PLUS, e, a - e, a - e),
        (MINUS, a, a - e, a - e),
        (PLUS, a - 2 * e, a - e, a - e),
    )


@pytest.mark.parametrize("a, e", [(5, 2), (3, 1), (4, 1), (9, 2)])
def test_gen_z2sum_table(a, e) -> None:
    data = gen_z2sum(a, e)

    assert len(data) == 10
    assert data == _z2_sum_table(a, e)


def test_gen_z2sum_matches_manual_composition() -> None:
    gluing = (FixedPoint(PLUS, (5, 3, 2)), FixedPoint(MINUS, (5, 3, 2)))
    manual = connected_sum(gen_zn(2, 5, 2, 2), reverse_orientation(gen_zn(2, 5, 3, 3)), [gluing])

    assert gen_z2sum(5, 2) == manual


@pytest.mark.parametrize("a, e", [(4, 2), (2, 1), (3, 0), (3, 2)])
def test_gen_z2sum_rejects_degenerate_parameters(a, e) -> None:
    with pytest.raises(DegenerateParametersError):
        gen_z2sum(a, e)


@pytest.mark.parametrize(
    "label, expected",
    [
        (GeneratorLabel(GeneratorFamily.S6, (1, 2, 3)), gen_s6(1, 2, 3)),
        (GeneratorLabel(GeneratorFamily.CP3, (1, 2, 3), reversed=True), reverse_orientation(gen_cp3(1, 2, 3))),
        (GeneratorLabel(GeneratorFamily.Z1, (3, 2, 1)), gen_zn(1, 3, 2, 1)),
        (GeneratorLabel(GeneratorFamily.Z2, (5, 2, 2), reversed=True), reverse_orientation(gen_zn(2, 5, 2, 2))),
        (GeneratorLabel(GeneratorFamily.Z2SUM, (5, 2)), gen_z2sum(5, 2)),
    ],
)
def test_generate_from_label(label, expected) -> None:
    assert generate(label) == expected
