# ABOUTME: HomogeneousPoly: dense complex coefficients of a ternary form of fixed degree.
# ABOUTME: Evaluation, exact products, derivatives and coordinate changes by exponent bookkeeping.

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from hyperdet.common.config.constants import DEFAULT_POLY_REAL_TOL
from hyperdet.errors import (
    DegreeMismatchError,
    DimensionMismatchError,
    InvalidInputError,
    SingularTransformError,
)
from hyperdet.poly.monomials import (
    Monomial,
    monomial_count,
    monomial_evaluation_matrix,
    monomial_exponents,
    monomial_index,
    monomial_indices,
)

if TYPE_CHECKING:
    from numpy.typing import ArrayLike

_VARIABLES = ("x", "y", "z")


@dataclass(frozen=True, eq=False)
class HomogeneousPoly:
    """A homogeneous polynomial in x, y, z with complex coefficients.

    coeffs is indexed by monomial_index (descending lex, x^d first). The array is
    copied on construction and marked read-only.
    """

    degree: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise InvalidInputError(f"Degree must be non-negative; got {self.degree}")
        arr = np.array(self.coeffs, dtype=np.complex128).reshape(-1)
        expected = monomial_count(self.degree)
        if arr.shape[0] != expected:
            raise DimensionMismatchError(
                f"Degree {self.degree} needs {expected} coefficients; got {arr.shape[0]}"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    # --- construction ---

    @classmethod
    def zero(cls, degree: int) -> HomogeneousPoly:
        return cls(degree, np.zeros(monomial_count(degree), dtype=np.complex128))

    @classmethod
    def from_terms(cls, degree: int, terms: Mapping[tuple[int, int, int], complex]) -> HomogeneousPoly:
        """Build from {(i, j, k): coefficient}; repeated monomials are not possible in a mapping."""
        coeffs = np.zeros(monomial_count(degree), dtype=np.complex128)
        for exp, value in terms.items():
            coeffs[monomial_index(exp, degree)] += value
        return cls(degree, coeffs)

    @classmethod
    def linear_form(cls, values: ArrayLike) -> HomogeneousPoly:
        """a*x + b*y + c*z from (a, b, c)."""
        return cls(1, np.asarray(values, dtype=np.complex128))

    # --- queries ---

    @property
    def exponents(self) -> np.ndarray:
        return monomial_exponents(self.degree)

    def is_real(self, tol: float = DEFAULT_POLY_REAL_TOL) -> bool:
        return bool(np.all(np.abs(self.coeffs.imag) <= tol))

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def max_abs_coeff(self) -> float:
        return float(np.max(np.abs(self.coeffs))) if self.coeffs.size else 0.0

    def terms(self) -> Iterator[tuple[Monomial, complex]]:
        """Non-zero terms in monomial order."""
        for exp, c in zip(self.exponents, self.coeffs, strict=True):
            if c != 0:
                yield Monomial(int(exp[0]), int(exp[1]), int(exp[2])), complex(c)

    def coefficient(self, exp: tuple[int, int, int]) -> complex:
        return complex(self.coeffs[monomial_index(exp, self.degree)])

    def allclose(self, other: HomogeneousPoly, atol: float = 1e-12, rtol: float = 0.0) -> bool:
        if other.degree != self.degree:
            return False
        return bool(np.allclose(self.coeffs, other.coeffs, atol=atol, rtol=rtol))

    # --- evaluation ---

    def __call__(self, pt: ArrayLike) -> complex:
        return evaluate(self, pt)

    def evaluate_many(self, points: ArrayLike) -> np.ndarray:
        """Values at each row of an (n, 3) array."""
        return monomial_evaluation_matrix(np.asarray(points), self.degree) @ self.coeffs

    def magnitude_bound(self, pt: ArrayLike) -> float:
        """sum |c_m| |pt^m|, the natural scale for relative residuals at pt."""
        row = monomial_evaluation_matrix(np.asarray(pt), self.degree)[0]
        return float(np.abs(self.coeffs) @ np.abs(row))

    # --- arithmetic ---

    def _check_same_degree(self, other: HomogeneousPoly) -> None:
        if other.degree != self.degree:
            raise DegreeMismatchError(
                f"Cannot combine degree {self.degree} with degree {other.degree}"
            )

    def __add__(self, other: HomogeneousPoly) -> HomogeneousPoly:
        self._check_same_degree(other)
        return HomogeneousPoly(self.degree, self.coeffs + other.coeffs)

    def __sub__(self, other: HomogeneousPoly) -> HomogeneousPoly:
        self._check_same_degree(other)
        return HomogeneousPoly(self.degree, self.coeffs - other.coeffs)

    def __neg__(self) -> HomogeneousPoly:
        return HomogeneousPoly(self.degree, -self.coeffs)

    def __mul__(self, other: HomogeneousPoly | complex | float) -> HomogeneousPoly:
        if isinstance(other, HomogeneousPoly):
            return multiply(self, other)
        return HomogeneousPoly(self.degree, self.coeffs * complex(other))

    def __rmul__(self, other: complex | float) -> HomogeneousPoly:
        return HomogeneousPoly(self.degree, self.coeffs * complex(other))

    def __truediv__(self, other: complex | float) -> HomogeneousPoly:
        return HomogeneousPoly(self.degree, self.coeffs / complex(other))

    def __str__(self) -> str:
        from hyperdet.poly.parser import format_polynomial

        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"HomogeneousPoly(degree={self.degree}, '{self}')"


def _as_point(pt: ArrayLike) -> np.ndarray:
    arr = np.asarray(pt, dtype=np.complex128).reshape(-1)
    if arr.shape[0] != 3:
        raise DimensionMismatchError(f"Expected a point with 3 coordinates; got {arr.shape[0]}")
    return arr


def evaluate(p: HomogeneousPoly, pt: ArrayLike) -> complex:
    """Value of p at a point of C^3."""
    row = monomial_evaluation_matrix(_as_point(pt), p.degree)[0]
    return complex(row @ p.coeffs)


def multiply(p: HomogeneousPoly, q: HomogeneousPoly) -> HomogeneousPoly:
    """Exact product; coefficients accumulate by exponent addition."""
    d = p.degree + q.degree
    sums = p.exponents[:, None, :] + q.exponents[None, :, :]
    idx = monomial_indices(sums.reshape(-1, 3), d)
    out = np.zeros(monomial_count(d), dtype=np.complex128)
    np.add.at(out, idx, np.outer(p.coeffs, q.coeffs).reshape(-1))
    return HomogeneousPoly(d, out)


def multiply_by_variable(p: HomogeneousPoly, var: int) -> HomogeneousPoly:
    """p * x_var, a pure relabelling of coefficients."""
    exps = p.exponents.copy()
    exps[:, var] += 1
    out = np.zeros(monomial_count(p.degree + 1), dtype=np.complex128)
    out[monomial_indices(exps, p.degree + 1)] = p.coeffs
    return HomogeneousPoly(p.degree + 1, out)


def partial_derivative(p: HomogeneousPoly, var: int) -> HomogeneousPoly:
    """d p / d x_var for var in {0, 1, 2}."""
    if p.degree == 0:
        raise InvalidInputError("Cannot differentiate a degree-0 polynomial")
    if var not in (0, 1, 2):
        raise InvalidInputError(f"Variable index must be 0, 1 or 2; got {var}")
    exps = p.exponents
    mask = exps[:, var] > 0
    shifted = exps[mask].copy()
    shifted[:, var] -= 1
    out = np.zeros(monomial_count(p.degree - 1), dtype=np.complex128)
    out[monomial_indices(shifted, p.degree - 1)] = p.coeffs[mask] * exps[mask, var]
    return HomogeneousPoly(p.degree - 1, out)


def gradient(p: HomogeneousPoly) -> tuple[HomogeneousPoly, HomogeneousPoly, HomogeneousPoly]:
    return (partial_derivative(p, 0), partial_derivative(p, 1), partial_derivative(p, 2))


def directional_derivative(p: HomogeneousPoly, e: ArrayLike) -> HomogeneousPoly:
    """e1 dp/dx + e2 dp/dy + e3 dp/dz."""
    direction = np.asarray(e, dtype=np.float64).reshape(-1)
    if direction.shape[0] != 3:
        raise DimensionMismatchError(f"Direction must have 3 entries; got {direction.shape[0]}")
    if p.degree == 0:
        raise InvalidInputError("Cannot differentiate a degree-0 polynomial")
    out = HomogeneousPoly.zero(p.degree - 1)
    for var, weight in enumerate(direction):
        if weight != 0:
            out = out + weight * partial_derivative(p, var)
    return out


def conjugate_coeffs(p: HomogeneousPoly) -> HomogeneousPoly:
    return HomogeneousPoly(p.degree, np.conj(p.coeffs))


def change_coords(p: HomogeneousPoly, transform: ArrayLike) -> HomogeneousPoly:
    """Return q with q(v) = p(T v) for an invertible 3x3 matrix T."""
    t = np.asarray(transform, dtype=np.complex128)
    if t.shape != (3, 3):
        raise DimensionMismatchError(f"Coordinate change must be 3x3; got {t.shape}")
    if np.linalg.matrix_rank(t) < 3:
        raise SingularTransformError("Coordinate change matrix is singular")

    d = p.degree
    # x_r -> (T v)_r = sum_c T[r, c] v_c
    forms = [HomogeneousPoly.linear_form(t[r]) for r in range(3)]
    powers = [[HomogeneousPoly(0, [1.0])] for _ in range(3)]
    for r in range(3):
        for _ in range(d):
            powers[r].append(multiply(powers[r][-1], forms[r]))

    out = np.zeros(monomial_count(d), dtype=np.complex128)
    xy_cache: dict[tuple[int, int], HomogeneousPoly] = {}
    for exp, c in zip(p.exponents, p.coeffs, strict=True):
        if c == 0:
            continue
        i, j, k = (int(v) for v in exp)
        if (i, j) not in xy_cache:
            xy_cache[(i, j)] = multiply(powers[0][i], powers[1][j])
        out += c * multiply(xy_cache[(i, j)], powers[2][k]).coeffs
    return HomogeneousPoly(d, out)


def variable_name(var: int) -> str:
    return _VARIABLES[var]
