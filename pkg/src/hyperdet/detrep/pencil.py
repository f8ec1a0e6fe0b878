# ABOUTME: HermitianPencil x*M1 + y*M2 + z*M3 and its 3d^2 real parameterisation.
# ABOUTME: Per matrix: d real diagonal entries, then (Re, Im) of each strictly-upper entry in row-major order.

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING, Literal

import numpy as np

from hyperdet.common.config.constants import DEFAULT_HERMITIAN_TOL
from hyperdet.errors import DimensionMismatchError, InvalidInputError, NotHermitianError
from hyperdet.numerics.linalg import det_numeric

if TYPE_CHECKING:
    from numpy.typing import ArrayLike

Part = Literal["re", "im"]


def parameter_count(d: int) -> int:
    return 3 * d * d


def parameter_index(d: int, k: int, i: int, j: int, part: Part = "re") -> int:
    """Position of Re or Im of entry (i, j), i <= j, of matrix k in the parameter vector.

    Diagonal entries only have a real part.
    """
    if not (0 <= k < 3 and 0 <= i <= j < d):
        raise InvalidInputError(f"No parameter for matrix {k}, entry ({i}, {j}) at d = {d}")
    base = k * d * d
    if i == j:
        if part != "re":
            raise InvalidInputError("Diagonal entries of a Hermitian matrix are real")
        return base + i
    upper = i * d - i * (i + 1) // 2 + (j - i - 1)
    return base + d + 2 * upper + (0 if part == "re" else 1)


@lru_cache(maxsize=32)
def _weights(d: int) -> np.ndarray:
    """weights[k, i, j, p] = d M_k[i, j] / d x_p (read-only)."""
    w = np.zeros((3, d, d, parameter_count(d)), dtype=np.complex128)
    rows, cols = np.triu_indices(d, 1)
    for k in range(3):
        for i in range(d):
            w[k, i, i, parameter_index(d, k, i, i)] = 1.0
        for i, j in zip(rows, cols, strict=True):
            re = parameter_index(d, k, int(i), int(j), "re")
            w[k, i, j, re] = 1.0
            w[k, j, i, re] = 1.0
            w[k, i, j, re + 1] = 1j
            w[k, j, i, re + 1] = -1j
    w.setflags(write=False)
    return w


def parameter_weights(d: int) -> np.ndarray:
    return _weights(d)


@dataclass(frozen=True, eq=False)
class HermitianPencil:
    """Three d x d Hermitian matrices stacked as an array of shape (3, d, d)."""

    matrices: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.matrices, dtype=np.complex128)
        if arr.ndim != 3 or arr.shape[0] != 3 or arr.shape[1] != arr.shape[2]:
            raise DimensionMismatchError(f"Pencil needs shape (3, d, d); got {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "matrices", arr)

    @classmethod
    def from_matrices(
        cls, m1: ArrayLike, m2: ArrayLike, m3: ArrayLike, hermitian_tol: float = DEFAULT_HERMITIAN_TOL
    ) -> HermitianPencil:
        """Checks Hermiticity to hermitian_tol and stores the symmetrised matrices."""
        stack = np.array([m1, m2, m3], dtype=np.complex128)
        if stack.ndim != 3 or stack.shape[1] != stack.shape[2]:
            raise DimensionMismatchError(f"Pencil matrices must be square and equal-sized; got {stack.shape}")
        adjoint = np.conj(np.transpose(stack, (0, 2, 1)))
        scale = max(1.0, float(np.max(np.abs(stack)))) if stack.size else 1.0
        skew = float(np.max(np.abs(stack - adjoint))) if stack.size else 0.0
        if skew > hermitian_tol * scale:
            raise NotHermitianError(f"Pencil matrices are not Hermitian: max |M - M*| = {skew:.3e}")
        return cls((stack + adjoint) / 2)

    @classmethod
    def from_parameters(cls, params: ArrayLike, d: int) -> HermitianPencil:
        x = np.asarray(params, dtype=np.float64).reshape(-1)
        if x.shape[0] != parameter_count(d):
            raise DimensionMismatchError(
                f"Pencil of size {d} needs {parameter_count(d)} parameters; got {x.shape[0]}"
            )
        return cls(_weights(d) @ x)

    def to_parameters(self) -> np.ndarray:
        d = self.d
        x = np.zeros(parameter_count(d))
        rows, cols = np.triu_indices(d, 1)
        for k in range(3):
            for i in range(d):
                x[parameter_index(d, k, i, i)] = self.matrices[k, i, i].real
            for i, j in zip(rows, cols, strict=True):
                re = parameter_index(d, k, int(i), int(j), "re")
                x[re] = self.matrices[k, i, j].real
                x[re + 1] = self.matrices[k, i, j].imag
        return x

    @property
    def d(self) -> int:
        return int(self.matrices.shape[1])

    @property
    def m1(self) -> np.ndarray:
        return self.matrices[0]

    @property
    def m2(self) -> np.ndarray:
        return self.matrices[1]

    @property
    def m3(self) -> np.ndarray:
        return self.matrices[2]

    def evaluate(self, pt: ArrayLike) -> np.ndarray:
        """x*M1 + y*M2 + z*M3 at pt = (x, y, z)."""
        v = np.asarray(pt, dtype=np.complex128).reshape(-1)
        if v.shape[0] != 3:
            raise DimensionMismatchError(f"Pencil is evaluated at 3-vectors; got {v.shape[0]} entries")
        return np.tensordot(v, self.matrices, axes=1)

    def determinant(self, pt: ArrayLike) -> complex:
        return det_numeric(self.evaluate(pt))

    def scaled(self, factor: float) -> HermitianPencil:
        return HermitianPencil(self.matrices * float(factor))

    def max_hermitian_error(self) -> float:
        adjoint = np.conj(np.transpose(self.matrices, (0, 2, 1)))
        return float(np.max(np.abs(self.matrices - adjoint))) if self.matrices.size else 0.0
