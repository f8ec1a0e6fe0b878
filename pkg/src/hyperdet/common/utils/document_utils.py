"""JSON document helpers shared by every file format (polynomials, point sets, bases, representations).

Complex numbers travel as ``[re, im]`` pairs. Reading wraps missing files and validation
failures in InvalidInputError so the CLI can map them to exit code 1.
"""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING, TypeVar

import numpy as np
from pydantic import BaseModel, ValidationError

from hyperdet.common.observability.logging_utils import get_logger
from hyperdet.errors import InvalidInputError

if TYPE_CHECKING:
    from numpy.typing import ArrayLike

logger = get_logger(__name__)

DocumentT = TypeVar("DocumentT", bound=BaseModel)

ComplexPair = tuple[float, float]


def to_pairs(values: ArrayLike) -> list[ComplexPair]:
    """Flatten a complex vector into [re, im] pairs."""
    arr = np.asarray(values, dtype=np.complex128).reshape(-1)
    return [(float(v.real), float(v.imag)) for v in arr]


def from_pairs(pairs: list[ComplexPair] | list[list[float]]) -> np.ndarray:
    arr = np.asarray(pairs, dtype=np.float64).reshape(-1, 2)
    return arr[:, 0] + 1j * arr[:, 1]


def matrix_to_pairs(matrix: ArrayLike) -> list[list[ComplexPair]]:
    arr = np.asarray(matrix, dtype=np.complex128)
    return [to_pairs(row) for row in arr]


def matrix_from_pairs(rows: list[list[ComplexPair]]) -> np.ndarray:
    if not rows:
        return np.zeros((0, 0), dtype=np.complex128)
    return np.stack([from_pairs(row) for row in rows])


def read_document(path: Path | str, model: type[DocumentT]) -> DocumentT:
    """Load and validate a JSON document."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidInputError(f"Cannot read {path}: {e}") from e
    try:
        doc = model.model_validate_json(text)
    except ValidationError as e:
        raise InvalidInputError(f"Invalid {model.__name__} in {path}: {e}") from e
    logger.debug(f"Loaded {model.__name__} from {path}")
    return doc


def write_document(path: Path | str, doc: BaseModel) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(doc.model_dump_json(indent=2) + "\n", encoding="utf-8")
    logger.info(f"Wrote {type(doc).__name__} to {path}")
