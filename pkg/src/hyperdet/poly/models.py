# ABOUTME: Pydantic model for the polynomial JSON format.
# ABOUTME: {"degree": d, "terms": [{"exp": [i, j, k], "re": float, "im": float}, ...]}

from __future__ import annotations

from pathlib import Path

from pydantic import BaseModel, Field, model_validator

from hyperdet.common.utils.document_utils import read_document
from hyperdet.poly.homogeneous import HomogeneousPoly


class TermModel(BaseModel):
    """One monomial term; omitted monomials are zero."""

    exp: tuple[int, int, int]
    re: float
    im: float = 0.0

    @model_validator(mode="after")
    def _non_negative(self) -> TermModel:
        if min(self.exp) < 0:
            raise ValueError(f"Exponents must be non-negative, got {list(self.exp)}")
        return self


class PolynomialDocument(BaseModel):
    degree: int = Field(ge=0)
    terms: list[TermModel] = []

    @model_validator(mode="after")
    def _terms_match_degree(self) -> PolynomialDocument:
        for term in self.terms:
            if sum(term.exp) != self.degree:
                raise ValueError(
                    f"Term {list(term.exp)} has degree {sum(term.exp)}, expected {self.degree}"
                )
        return self

    @classmethod
    def from_poly(cls, p: HomogeneousPoly) -> PolynomialDocument:
        terms = [
            TermModel(exp=(mono.i, mono.j, mono.k), re=c.real, im=c.imag) for mono, c in p.terms()
        ]
        return cls(degree=p.degree, terms=terms)

    def to_poly(self) -> HomogeneousPoly:
        coeffs: dict[tuple[int, int, int], complex] = {}
        for term in self.terms:
            coeffs[term.exp] = coeffs.get(term.exp, 0j) + complex(term.re, term.im)
        return HomogeneousPoly.from_terms(self.degree, coeffs)


def load_polynomial(path: Path | str) -> HomogeneousPoly:
    return read_document(path, PolynomialDocument).to_poly()
