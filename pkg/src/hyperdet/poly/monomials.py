# ABOUTME: Monomial basis of degree-d ternary forms in descending lexicographic order.
# ABOUTME: x^d is index 0, z^d is the last index; all index maps are closed-form.

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

import numpy as np

from hyperdet.errors import DegreeMismatchError, InvalidInputError


class Monomial(NamedTuple):
    """Exponents (i, j, k) of x^i y^j z^k."""

    i: int
    j: int
    k: int

    @property
    def degree(self) -> int:
        return self.i + self.j + self.k


def monomial_count(d: int) -> int:
    """Number of monomials of degree d in three variables, binom(d+2, 2)."""
    if d < 0:
        raise InvalidInputError(f"Degree must be non-negative; got {d}")
    return (d + 2) * (d + 1) // 2


@lru_cache(maxsize=64)
def _exponents(d: int) -> np.ndarray:
    rows = [(i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1)]
    table = np.array(rows, dtype=np.int64).reshape(-1, 3)
    table.setflags(write=False)
    return table


def monomial_exponents(d: int) -> np.ndarray:
    """Read-only (binom(d+2,2), 3) array of exponents in the fixed order."""
    monomial_count(d)
    return _exponents(d)


def monomial_indices(exps: np.ndarray, d: int) -> np.ndarray:
    """Vectorised monomial_index for an (n, 3) exponent array (no validation)."""
    exps = np.asarray(exps, dtype=np.int64)
    rest = d - exps[:, 0]
    return rest * (rest + 1) // 2 + (rest - exps[:, 1])


def monomial_index(exp: tuple[int, int, int], d: int) -> int:
    """Position of x^i y^j z^k among the degree-d monomials."""
    i, j, k = (int(v) for v in exp)
    if min(i, j, k) < 0:
        raise InvalidInputError(f"Exponents must be non-negative; got {(i, j, k)}")
    if i + j + k != d:
        raise DegreeMismatchError(f"Monomial {(i, j, k)} has degree {i + j + k}, expected {d}")
    rest = d - i
    return rest * (rest + 1) // 2 + (rest - j)


def monomial_at(index: int, d: int) -> Monomial:
    """Inverse of monomial_index."""
    if not 0 <= index < monomial_count(d):
        raise InvalidInputError(f"Monomial index {index} out of range for degree {d}")
    i, j, k = _exponents(d)[index]
    return Monomial(int(i), int(j), int(k))


def monomial_evaluation_matrix(points: np.ndarray, d: int) -> np.ndarray:
    """Rows are the degree-d monomials evaluated at each point of an (n, 3) array."""
    pts = np.atleast_2d(np.asarray(points, dtype=np.complex128))
    exps = _exponents(d)
    # powers[n, e, v] = pts[n, v] ** e by repeated multiplication
    powers = np.ones((pts.shape[0], d + 1, 3), dtype=np.complex128)
    for e in range(1, d + 1):
        powers[:, e, :] = powers[:, e - 1, :] * pts
    return (
        powers[:, exps[:, 0], 0] * powers[:, exps[:, 1], 1] * powers[:, exps[:, 2], 2]
    )
