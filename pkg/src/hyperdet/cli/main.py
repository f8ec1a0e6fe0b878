"""Command-line entry point: ``hyperdet represent | generate | verify | bench``.

Standard output carries command results (summary lines, JSON, tables); logs go to standard
error. Every HyperdetError maps to its exit code:

    0 success, 1 invalid input, 2 not hyperbolic / not interlacing, 3 transversality failure,
    4 solver or numerics failure, 5 degree or dimension mismatch, 6 verification failed.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import yaml
from dotenv import load_dotenv
from pydantic import ValidationError

from hyperdet.cli.bench import cmd_bench
from hyperdet.cli.commands import cmd_generate, cmd_represent, cmd_verify
from hyperdet.common.config.constants import (
    DEFAULT_BENCH_DEGREES,
    DEFAULT_BENCH_INSTANCES,
    DEFAULT_DIRECTION,
    DEFAULT_VERIFY_TOL,
)
from hyperdet.common.config.hyperdet_settings import set_hyperdet_settings
from hyperdet.common.config.settings_loader import load_settings_file
from hyperdet.common.observability.logging_utils import get_logger, run_context, setup_logging
from hyperdet.errors import HyperdetError, InvalidInputError

logger = get_logger(__name__)


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for every random choice (default: 0)")
    common.add_argument("--out", help="write the result document to this path")
    common.add_argument("--json", action="store_true", help="print the result as JSON")
    common.add_argument("--config", help="YAML settings file with a top-level 'hyperdet:' mapping")
    common.add_argument("--log-level", help="log level name or number (default: LOG_LEVEL or INFO)")
    return common


def _input_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--poly", help='polynomial text, e.g. "x^2 - y^2 - z^2"')
    parser.add_argument("--in", dest="input", help="polynomial JSON file")
    parser.add_argument(
        "--tol",
        type=float,
        default=DEFAULT_VERIFY_TOL,
        help=f"relative error threshold (default: {DEFAULT_VERIFY_TOL})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperdet",
        description="Definite Hermitian determinantal representations of hyperbolic plane curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_flags()

    rep = sub.add_parser("represent", parents=[common], help="compute a representation")
    _input_flags(rep)
    rep.add_argument("--e", default=DEFAULT_DIRECTION, help=f"direction (default: {DEFAULT_DIRECTION})")
    rep.add_argument("--interlacer", help="polynomial JSON file replacing the directional derivative")
    rep.add_argument("--points", help="point-set JSON file replacing the computed intersection")
    rep.add_argument("--basis", help="basis JSON file replacing the computed vanishing basis")
    rep.set_defaults(handler=cmd_represent)

    gen = sub.add_parser("generate", parents=[common], help="generate a random hyperbolic instance")
    gen.add_argument("--degree", type=int, required=True, help="degree d >= 1")
    gen.set_defaults(handler=cmd_generate)

    ver = sub.add_parser("verify", parents=[common], help="check a representation against f")
    _input_flags(ver)
    ver.add_argument("--rep", required=True, help="representation JSON file")
    ver.set_defaults(handler=cmd_verify)

    bench = sub.add_parser("bench", parents=[common], help="time and error table over random instances")
    bench.add_argument(
        "--degrees",
        default=DEFAULT_BENCH_DEGREES,
        help=f"degree range or list, e.g. 3..10 or 3,5,8 (default: {DEFAULT_BENCH_DEGREES})",
    )
    bench.add_argument(
        "--instances",
        type=int,
        default=DEFAULT_BENCH_INSTANCES,
        help=f"instances per degree (default: {DEFAULT_BENCH_INSTANCES})",
    )
    bench.add_argument("--csv", help="also write the table as CSV to this path")
    bench.set_defaults(handler=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    load_dotenv()
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level, force=True)

    try:
        if args.config:
            set_hyperdet_settings(load_settings_file(Path(args.config)))
        with run_context(args.command):
            logger.debug(f"Running {args.command} with seed {args.seed}")
            return args.handler(args)
    except HyperdetError as e:
        print(f"error [{e.ERROR_CODE}]: {e.detail}", file=sys.stderr)
        return e.exit_code
    except (FileNotFoundError, ValueError, ValidationError, yaml.YAMLError) as e:
        print(f"error [{InvalidInputError.ERROR_CODE}]: {e}", file=sys.stderr)
        return InvalidInputError.exit_code


if __name__ == "__main__":
    sys.exit(main())
