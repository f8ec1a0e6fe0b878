# ABOUTME: Homogeneous ternary forms: monomial order, arithmetic, derivatives, parsing and JSON I/O.

from hyperdet.poly.homogeneous import (
    HomogeneousPoly,
    change_coords,
    conjugate_coeffs,
    directional_derivative,
    evaluate,
    gradient,
    multiply,
    multiply_by_variable,
    partial_derivative,
)
from hyperdet.poly.models import PolynomialDocument, load_polynomial
from hyperdet.poly.monomials import (
    Monomial,
    monomial_at,
    monomial_count,
    monomial_evaluation_matrix,
    monomial_exponents,
    monomial_index,
)
from hyperdet.poly.parser import format_polynomial, parse_polynomial

__all__ = [
    "HomogeneousPoly",
    "Monomial",
    "PolynomialDocument",
    "change_coords",
    "conjugate_coeffs",
    "directional_derivative",
    "evaluate",
    "format_polynomial",
    "gradient",
    "load_polynomial",
    "monomial_at",
    "monomial_count",
    "monomial_evaluation_matrix",
    "monomial_exponents",
    "monomial_index",
    "multiply",
    "multiply_by_variable",
    "parse_polynomial",
    "partial_derivative",
]
