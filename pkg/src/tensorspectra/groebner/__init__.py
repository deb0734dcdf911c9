"""Exact rational polynomials, Buchberger's algorithm and spectral ideals."""

from .buchberger import GroebnerBasis, Limits, buchberger, is_groebner, poly_reduce, s_polynomial
from .ideals import (
    characteristic_set,
    det_minus_lambda,
    matrix_char_ideal,
    matrix_variables,
    tensor3_char_ideal,
    tensor3_variables,
)
from .poly import MultiPoly, parse_poly, to_fraction

__all__ = [
    "GroebnerBasis",
    "Limits",
    "MultiPoly",
    "buchberger",
    "characteristic_set",
    "det_minus_lambda",
    "is_groebner",
    "matrix_char_ideal",
    "matrix_variables",
    "parse_poly",
    "poly_reduce",
    "s_polynomial",
    "tensor3_char_ideal",
    "tensor3_variables",
    "to_fraction",
]
