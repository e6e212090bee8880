import itertools

import pytest
from hypothesis import given, strategies as st

from src.errors import NonPositiveWeightError, PairNotPresentError
from src.models.fixed_point import FixedPoint, FixedPointData, Sign, make_fixed_point

PLUS, MINUS = Sign.PLUS, Sign.MINUS

points = st.builds(
    FixedPoint,
    st.sampled_from(list(Sign)),
    st.tuples(st.integers(1, 9), st.integers(1, 9), st.integers(1, 9)),
)


@pytest.mark.parametrize(
    "sign, weights, expected",
    [
        (PLUS, (1, 2, 3), (3, 2, 1)),
        (MINUS, (2, 2, 2), (2, 2, 2)),
        (PLUS, (3, 1, 3), (3, 3, 1)),
    ],
)
def test_make_fixed_point_sorts_descending(sign, weights, expected) -> None:
    point = make_fixed_point(sign, *weights)

    assert point.sign is sign
    assert point.weights == expected


def test_non_positive_weight_rejected() -> None:
    with pytest.raises(NonPositiveWeightError):
        make_fixed_point(PLUS, 0, 1, 2)
    with pytest.raises(NonPositiveWeightError):
        make_fixed_point(MINUS, 3, -1, 2)


@pytest.mark.parametrize("weights", [(2.7, 1, 1), (2.0, 1, 1), ("3", 2, 1)])
def test_non_integer_weight_rejected(weights) -> None:
    with pytest.raises(TypeError):
        FixedPoint(PLUS, weights)


def test_permutations_give_equal_points() -> None:
    variants = {make_fixed_point(MINUS, *perm) for perm in itertools.permutations((4, 1, 2))}

    assert variants == {FixedPoint(MINUS, (4, 2, 1))}
    assert FixedPoint(PLUS, (4, 2, 1)) not in variants


def test_str_uses_file_syntax() -> None:
    assert str(make_fixed_point(MINUS, 1, 3, 2)) == "- 3 2 1"


def test_data_canonical_order_puts_plus_first() -> None:
    data = FixedPointData.of(
        [
            FixedPoint(MINUS, (2, 1, 1)),
            FixedPoint(PLUS, (2, 1, 1)),
            FixedPoint(MINUS, (3, 2, 1)),
            FixedPoint(PLUS, (3, 2, 1)),
        ]
    )

    assert [str(point) for point in data] == ["+ 3 2 1", "+ 2 1 1", "- 3 2 1", "- 2 1 1"]


def test_data_keeps_multiplicity() -> None:
    point = FixedPoint(PLUS, (2, 2, 1))
    data = FixedPointData.of([point, point, point.flipped()])

    assert len(data) == 3
    assert data.count(point) == 2
    assert data.without([point]).count(point) == 1


def test_without_missing_point_raises() -> None:
    data = FixedPointData.of([FixedPoint(PLUS, (1, 1, 1))])

    with pytest.raises(PairNotPresentError):
        data.without([FixedPoint(MINUS, (1, 1, 1))])


def test_net_counts_drop_cancelling_triples() -> None:
    data = FixedPointData.of(
        [FixedPoint(PLUS, (3, 2, 1)), FixedPoint(MINUS, (3, 2, 1)), FixedPoint(PLUS, (1, 1, 1))]
    )

    assert data.net_counts() == {(1, 1, 1): 1}


@given(st.lists(points, max_size=8), points)
def test_remove_then_insert_restores_data(items, extra) -> None:
    data = FixedPointData.of(items + [extra])

    assert data.without([extra]).with_points([extra]) == data


@given(st.lists(points, max_size=8))
def test_construction_order_does_not_matter(items) -> None:
    assert FixedPointData.of(items) == FixedPointData.of(reversed(items))
