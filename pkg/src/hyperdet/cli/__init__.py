# ABOUTME: Command-line surface: represent, generate, verify and bench subcommands.

from hyperdet.cli.bench import BenchRow, format_table, parse_degrees, run_bench, run_instance
from hyperdet.cli.generator import gaussian, generate_random_hyperbolic, random_pencil
from hyperdet.cli.main import build_parser, main

__all__ = [
    "BenchRow",
    "build_parser",
    "format_table",
    "gaussian",
    "generate_random_hyperbolic",
    "main",
    "parse_degrees",
    "random_pencil",
    "run_bench",
    "run_instance",
]
