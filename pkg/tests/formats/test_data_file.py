import pytest
from hypothesis import given, strategies as st

from src.errors import NonPositiveWeightError, ParseError
from src.formats import parse_complex_data, parse_data, parse_pair, parse_point, print_data
from src.generators import gen_cp3
from src.models.fixed_point import FixedPoint, FixedPointData, Sign

PLUS, MINUS = Sign.PLUS, Sign.MINUS

points = st.builds(
    FixedPoint,
    st.sampled_from(list(Sign)),
    st.tuples(st.integers(1, 40), st.integers(1, 40), st.integers(1, 40)),
)
datasets = st.lists(points, max_size=10).map(FixedPointData.of)


@pytest.mark.parametrize("line", ["+ 3 2 1", "+3 2 1", "  + 1 3 2  ", "+\t2 3 1"])
def test_parse_point_forms(line) -> None:
    assert parse_point(line) == FixedPoint(PLUS, (3, 2, 1))


@pytest.mark.parametrize("line", ["3 2 1", "* 3 2 1", "+ 3 2", "+ 3 2 1 1", "- a 2 1", ""])
def test_parse_point_rejects_malformed_lines(line) -> None:
    with pytest.raises(ParseError):
        parse_point(line)


def test_parse_point_rejects_non_positive_weight() -> None:
    with pytest.raises(NonPositiveWeightError):
        parse_point("- 3 0 1")


def test_parse_data_skips_comments_and_blank_lines() -> None:
    text = "# CP3(1,2,3)\n+ 3 2 1\n\n- 2 1 1\n+ 2 1 1\n   # trailing\n- 3 2 1\n"

    assert parse_data(text) == gen_cp3(1, 2, 3)


def test_parse_error_names_the_line() -> None:
    with pytest.raises(ParseError) as excinfo:
        parse_data("+ 3 2 1\n# comment\n- 3 2\n")

    assert excinfo.value.line_number == 3
    assert str(excinfo.value).startswith("line 3:")


def test_empty_file_is_empty_data() -> None:
    assert parse_data("") == FixedPointData()
    assert print_data(FixedPointData()) == ""


def test_print_data_is_canonical() -> None:
    assert print_data(gen_cp3(1, 2, 3)) == "+ 3 2 1\n+ 2 1 1\n- 3 2 1\n- 2 1 1\n"


@given(datasets)
def test_printed_data_parses_back(data) -> None:
    assert parse_data(print_data(data)) == data



def test_parse_complex_data() -> None:
    text = "1 2 3\n-1 1 2\n-2 -1 1\n-3 -2 -1\n"

    assert parse_complex_data(text) == gen_cp3(1, 2, 3)


@pytest.mark.parametrize("text", ["1 0 2\n", "1 2\n", "1 x 2\n"])
def test_parse_complex_data_errors(text) -> None:
    with pytest.raises(ParseError):
        parse_complex_data(text)


def test_parse_pair() -> None:
    assert parse_pair("+3 2 1=-3 2 1") == (FixedPoint(PLUS, (3, 2, 1)), FixedPoint(MINUS, (3, 2, 1)))
    with pytest.raises(ParseError):
        parse_pair("+3 2 1")
