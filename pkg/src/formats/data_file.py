"""Plain-text fixed point data files: one `SIGN W1 W2 W3` line per fixed point."""

from __future__ import annotations

from typing import Iterator, List, Optional, Tuple

from src.errors import NonPositiveWeightError, ParseError, ZeroWeightError
from src.generators import ComplexWeights, complex_to_real
from src.models.fixed_point import FixedPoint, FixedPointData, Sign


def _content_lines(text: str) -> Iterator[Tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def _parse_ints(tokens: List[str], line_number: Optional[int]) -> List[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError as exc:
        raise ParseError(f"weights must be integers: {' '.join(tokens)!r}", line_number) from exc


def parse_point(line: str, line_number: Optional[int] = None) -> FixedPoint:
    """Parse `+ 3 2 1`; the sign may also be glued to the first weight (`+3 2 1`)."""

    text = line.strip()
    if not text or text[0] not in "+-":
        raise ParseError(f"expected a fixed point starting with '+' or '-': {line!r}", line_number)
    sign = Sign.from_symbol(text[0])
    tokens = text[1:].split()
    if len(tokens) != 3:
        raise ParseError(f"expected three weights, got {len(tokens)}: {line!r}", line_number)
    weights = _parse_ints(tokens, line_number)
    if any(weight < 1 for weight in weights):
        prefix = f"line {line_number}: " if line_number is not None else ""
        raise NonPositiveWeightError(f"{prefix}weights must be positive: {line!r}")
    return FixedPoint(sign, tuple(weights))


def parse_data(text: str) -> FixedPointData:
    return FixedPointData.of(parse_point(line, number) for number, line in _content_lines(text))


def print_data(data: FixedPointData) -> str:
    return "".join(f"{point}\n" for point in data)


def parse_complex_data(text: str) -> FixedPointData:
    """Lines of three nonzero complex weights, converted to real fixed point data."""

    points = []
    for number, line in _content_lines(text):
        tokens = line.split()
        if len(tokens) != 3:
            raise ParseError(f"expected three complex weights, got {len(tokens)}", number)
        try:
            points.append(complex_to_real(ComplexWeights(tuple(_parse_ints(tokens, number)))))
        except ZeroWeightError as exc:
            raise ParseError(str(exc), number) from exc
    return FixedPointData.of(points)


def parse_pair(text: str) -> Tuple[FixedPoint, FixedPoint]:
    """Parse a gluing pair written `+3 2 1=-3 2 1`."""

    left, sep, right = text.partition("=")
    if not sep:
        raise ParseError(f"a pair needs the form '<point>=<point>': {text!r}")
    return parse_point(left), parse_point(right)
