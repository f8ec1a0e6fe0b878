# ABOUTME: Handlers for the represent, generate and verify subcommands.
# ABOUTME: Each takes parsed argparse arguments and returns a process exit code; errors propagate to main.

from __future__ import annotations

import json
import sys
from typing import TYPE_CHECKING

import numpy as np

from hyperdet.cli.generator import generate_random_hyperbolic
from hyperdet.common.config.constants import EXIT_OK, EXIT_VERIFY_FAILED
from hyperdet.common.config.hyperdet_settings import get_hyperdet_settings
from hyperdet.common.observability.logging_utils import get_logger
from hyperdet.common.utils.document_utils import write_document
from hyperdet.detrep.basis import VanishingBasis
from hyperdet.detrep.models import RepresentationDocument, load_basis_entries, load_representation
from hyperdet.detrep.pipeline import RepresentOptions, represent
from hyperdet.errors import DegreeMismatchError, InvalidInputError
from hyperdet.intersect.models import load_point_set
from hyperdet.poly.models import PolynomialDocument, load_polynomial
from hyperdet.poly.parser import format_polynomial, parse_polynomial
from hyperdet.verify.checks import check_definite, hyperbolicity_check
from hyperdet.verify.metrics import representation_error

if TYPE_CHECKING:
    import argparse

    from hyperdet.poly.homogeneous import HomogeneousPoly

logger = get_logger(__name__)


def parse_direction(text: str) -> np.ndarray:
    """"1,0,0" -> array([1., 0., 0.])."""
    try:
        values = [float(part) for part in text.split(",")]
    except ValueError as e:
        raise InvalidInputError(f"Direction must be three comma-separated numbers; got {text!r}") from e
    if len(values) != 3 or not any(values):
        raise InvalidInputError(f"Direction must be a non-zero triple; got {text!r}")
    return np.array(values)


def load_input_polynomial(args: argparse.Namespace) -> HomogeneousPoly:
    if args.poly and args.input:
        raise InvalidInputError("Give either --poly or --in, not both")
    if args.poly:
        return parse_polynomial(args.poly)
    if args.input:
        return load_polynomial(args.input)
    raise InvalidInputError("An input polynomial is required (--poly or --in)")


def _represent_options(args: argparse.Namespace) -> RepresentOptions:
    interlacer = load_polynomial(args.interlacer) if args.interlacer else None
    intersection = load_point_set(args.points) if args.points else None
    basis = None
    if args.basis:
        s_points = intersection.s_points if intersection is not None else None
        basis = VanishingBasis.from_supplied(load_basis_entries(args.basis), s_points)
    return RepresentOptions(
        interlacer=interlacer, intersection=intersection, basis=basis, seed=args.seed
    )


def cmd_represent(args: argparse.Namespace) -> int:
    f = load_input_polynomial(args)
    direction = parse_direction(args.e)
    rep = represent(f, direction, _represent_options(args))
    error = representation_error(f, rep, seed=args.seed)
    if error.rel_error > args.tol:
        logger.warning(f"Relative error {error.rel_error:.3e} exceeds --tol {args.tol:.1e}")

    doc = RepresentationDocument.from_representation(rep, error)
    if args.out:
        write_document(args.out, doc)
    summary = (
        f"d={rep.d} c={rep.c:.12g} rel_error={error.rel_error:.3e} "
        f"residual={rep.lsq.residual_norm:.3e} time={rep.timings.total_seconds:.3f}s"
    )
    if args.json:
        # stdout stays a single JSON document
        print(doc.model_dump_json(indent=2))
        print(summary, file=sys.stderr)
    else:
        print(summary)
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    f = generate_random_hyperbolic(args.degree, args.seed)
    doc = PolynomialDocument.from_poly(f)
    if args.out:
        write_document(args.out, doc)
    if args.json:
        print(doc.model_dump_json(indent=2))
    elif not args.out:
        print(format_polynomial(f))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    f = load_input_polynomial(args)
    stored = load_representation(args.rep)
    if f.degree != stored.pencil.d:
        raise DegreeMismatchError(
            f"Polynomial has degree {f.degree}; representation has size {stored.pencil.d}"
        )
    settings = get_hyperdet_settings()
    report = representation_error(f, stored, seed=args.seed)
    definite = check_definite(stored, stored.direction)
    hyperbolic = hyperbolicity_check(
        f,
        stored.direction,
        trials=settings.hyperbolicity_trials,
        seed=args.seed,
        tol=settings.hyperbolicity_tol,
    )
    passed = report.rel_error <= args.tol and definite.is_definite

    if args.json:
        print(
            json.dumps(
                {
                    "abs_error": report.abs_error,
                    "rel_error": report.rel_error,
                    "c_used": report.c_used,
                    "sample_count": report.sample_count,
                    "fit_residual": report.fit_residual,
                    "definite": definite.is_definite,
                    "min_eigenvalue": definite.min_eigenvalue,
                    "hyperbolic": hyperbolic.is_hyperbolic,
                    "passed": passed,
                },
                indent=2,
            )
        )
    else:
        print(
            f"abs_error={report.abs_error:.3e} rel_error={report.rel_error:.3e} "
            f"c={report.c_used:.12g} samples={report.sample_count} fit_residual={report.fit_residual:.3e}"
        )
        print(f"definite={definite.is_definite} min_eigenvalue={definite.min_eigenvalue:.6g}")
        print(f"hyperbolic={hyperbolic.is_hyperbolic} worst_imaginary={hyperbolic.worst_imaginary:.3e}")
    return EXIT_OK if passed else EXIT_VERIFY_FAILED
