# ABOUTME: Coefficientwise error between f and c * det(pencil), absolute and relative to max |coeff(f)|.

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Protocol

import numpy as np

from hyperdet.errors import DegreeMismatchError
from hyperdet.verify.interpolation import fit_determinant

if TYPE_CHECKING:
    from hyperdet.detrep.pencil import HermitianPencil
    from hyperdet.poly.homogeneous import HomogeneousPoly


class ScaledPencil(Protocol):
    @property
    def pencil(self) -> HermitianPencil: ...

    @property
    def c(self) -> float: ...


@dataclass(frozen=True)
class ErrorReport:
    abs_error: float
    rel_error: float
    c_used: float
    sample_count: int
    fit_residual: float


def representation_error(f: HomogeneousPoly, rep: ScaledPencil, seed: int | None = 0) -> ErrorReport:
    if f.degree != rep.pencil.d:
        raise DegreeMismatchError(f"Polynomial has degree {f.degree}; pencil has size {rep.pencil.d}")
    fit = fit_determinant(rep.pencil, seed)
    abs_error = float(np.max(np.abs(f.coeffs - rep.c * fit.poly.coeffs)))
    largest = f.max_abs_coeff()
    return ErrorReport(
        abs_error=abs_error,
        rel_error=abs_error / largest if largest > 0 else abs_error,
        c_used=rep.c,
        sample_count=fit.sample_count,
        fit_residual=fit.fit_residual,
    )
