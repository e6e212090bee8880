"""Exact polynomial and truncated series arithmetic for the signature identity."""

from .polynomial import (
    IntPolynomial,
    one_minus_t_pow,
    one_plus_t_pow,
    poly_add,
    poly_mul,
)
from .series import TruncatedSeries
from .signature import (
    reduced_signature_poly,
    series_vanishes,
    signature_identity_poly,
    signature_series,
)

__all__ = [
    "IntPolynomial",
    "TruncatedSeries",
    "one_minus_t_pow",
    "one_plus_t_pow",
    "poly_add",
    "poly_mul",
    "reduced_signature_poly",
    "series_vanishes",
    "signature_identity_poly",
    "signature_series",
]
