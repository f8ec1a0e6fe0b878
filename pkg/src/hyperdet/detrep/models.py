# ABOUTME: Pydantic models for the representation and basis JSON files.
# ABOUTME: Timings are never serialised, so identical seeds give byte-identical documents.

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Protocol

import numpy as np
from pydantic import BaseModel, Field

from hyperdet.common.utils.document_utils import (
    ComplexPair,
    matrix_from_pairs,
    matrix_to_pairs,
    read_document,
)
from hyperdet.detrep.basis import VanishingBasis
from hyperdet.detrep.pencil import HermitianPencil
from hyperdet.detrep.pipeline import Representation
from hyperdet.errors import DimensionMismatchError
from hyperdet.poly.homogeneous import HomogeneousPoly
from hyperdet.poly.models import PolynomialDocument

Matrix = list[list[ComplexPair]]


class ErrorFigures(Protocol):
    abs_error: float
    rel_error: float
    c_used: float
    sample_count: int
    fit_residual: float


class ErrorReportModel(BaseModel):
    abs_error: float
    rel_error: float
    c_used: float
    sample_count: int
    fit_residual: float

    @classmethod
    def from_report(cls, report: ErrorFigures) -> ErrorReportModel:
        return cls(
            abs_error=report.abs_error,
            rel_error=report.rel_error,
            c_used=report.c_used,
            sample_count=report.sample_count,
            fit_residual=report.fit_residual,
        )


class DiagnosticsModel(BaseModel):
    residual: float
    rank: int
    min_singular_value: float
    retries: int = 0
    warnings: list[str] = []
    error: ErrorReportModel | None = None


@dataclass(frozen=True)
class StoredRepresentation:
    """A representation read back from JSON: enough to verify it."""

    pencil: HermitianPencil
    c: float
    direction: np.ndarray


class RepresentationDocument(BaseModel):
    d: int = Field(ge=1)
    c: float
    direction: tuple[float, float, float] = (1.0, 0.0, 0.0)
    M1: Matrix
    M2: Matrix
    M3: Matrix
    diagnostics: DiagnosticsModel

    @classmethod
    def from_representation(
        cls, rep: Representation, error: ErrorFigures | None = None
    ) -> RepresentationDocument:
        pencil = rep.pencil
        return cls(
            d=pencil.d,
            c=rep.c,
            direction=(float(rep.direction[0]), float(rep.direction[1]), float(rep.direction[2])),
            M1=matrix_to_pairs(pencil.m1),
            M2=matrix_to_pairs(pencil.m2),
            M3=matrix_to_pairs(pencil.m3),
            diagnostics=DiagnosticsModel(
                residual=rep.lsq.residual_norm,
                rank=rep.lsq.rank,
                min_singular_value=rep.lsq.smallest_singular_value,
                retries=rep.retries,
                warnings=list(rep.warnings),
                error=ErrorReportModel.from_report(error) if error is not None else None,
            ),
        )

    def to_pencil(self) -> HermitianPencil:
        mats = [matrix_from_pairs(m) for m in (self.M1, self.M2, self.M3)]
        if any(m.shape != (self.d, self.d) for m in mats):
            raise DimensionMismatchError(
                f"Matrices must be {self.d} x {self.d}; got {[m.shape for m in mats]}"
            )
        return HermitianPencil.from_matrices(*mats)

    def to_stored(self) -> StoredRepresentation:
        return StoredRepresentation(self.to_pencil(), self.c, np.array(self.direction))


class BasisDocument(BaseModel):
    """Basis file for the supplied-data path: entries[0] is a11."""

    entries: list[PolynomialDocument] = Field(min_length=1)

    @classmethod
    def from_basis(cls, basis: VanishingBasis) -> BasisDocument:
        return cls(entries=[PolynomialDocument.from_poly(a) for a in basis.entries])

    def to_polys(self) -> list[HomogeneousPoly]:
        return [entry.to_poly() for entry in self.entries]


def load_representation(path: Path | str) -> StoredRepresentation:
    return read_document(path, RepresentationDocument).to_stored()


def load_basis_entries(path: Path | str) -> list[HomogeneousPoly]:
    return read_document(path, BasisDocument).to_polys()
