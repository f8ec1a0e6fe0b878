# ABOUTME: Pydantic model for the point-set JSON consumed by the supplied-data path.
# ABOUTME: {"points": [{"coords": [[re, im], [re, im], [re, im]]}, ...], "S_indices": [...]}

from __future__ import annotations

from pathlib import Path

from pydantic import BaseModel, Field

from hyperdet.common.utils.document_utils import ComplexPair, from_pairs, read_document, to_pairs
from hyperdet.intersect.points import ProjectivePoint
from hyperdet.intersect.split import IntersectionSet, supplied_intersection_set


class PointModel(BaseModel):
    coords: list[ComplexPair] = Field(min_length=3, max_length=3)

    def to_point(self) -> ProjectivePoint:
        return ProjectivePoint.from_coords(from_pairs(self.coords))


class PointSetDocument(BaseModel):
    """Intersection points plus an optional choice of S (absent means compute the split)."""

    points: list[PointModel]
    S_indices: list[int] | None = None

    @classmethod
    def from_intersection_set(cls, iset: IntersectionSet) -> PointSetDocument:
        return cls(
            points=[PointModel(coords=to_pairs(p.coords)) for p in iset.points],
            S_indices=list(iset.s_indices),
        )

    def to_intersection_set(self) -> IntersectionSet:
        return supplied_intersection_set([p.to_point() for p in self.points], self.S_indices)


def load_point_set(path: Path | str) -> IntersectionSet:
    return read_document(path, PointSetDocument).to_intersection_set()
