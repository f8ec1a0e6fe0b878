# ABOUTME: Benchmark sweep over random instances per degree: mean timings and errors per degree row.
# ABOUTME: Instances can run in a process pool (HYPERDET_THREADS); rows are ordered by degree.

from __future__ import annotations

import csv
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import TYPE_CHECKING

import numpy as np

from hyperdet.cli.generator import generate_random_hyperbolic
from hyperdet.common.config.constants import EXIT_OK
from hyperdet.common.config.hyperdet_settings import (
    HyperdetSettings,
    get_hyperdet_settings,
    set_hyperdet_settings,
)
from hyperdet.common.observability.logging_utils import get_logger, run_context
from hyperdet.detrep.pipeline import RepresentOptions, represent
from hyperdet.errors import HyperdetError, InvalidInputError
from hyperdet.verify.metrics import representation_error

if TYPE_CHECKING:
    import argparse
    from collections.abc import Sequence

logger = get_logger(__name__)

_COLUMNS = (
    ("degree", "d", "{:d}"),
    ("mean_total_seconds", "time", "{:.4f}"),
    ("mean_intersection_seconds", "time V(f,g)", "{:.4f}"),
    ("mean_abs_error", "error", "{:.2e}"),
    ("mean_rel_error", "relative error", "{:.2e}"),
    ("instances", "instances", "{:d}"),
    ("failures", "failures", "{:d}"),
)


@dataclass(frozen=True)
class InstanceResult:
    degree: int
    index: int
    ok: bool
    total_seconds: float = 0.0
    intersection_seconds: float = 0.0
    abs_error: float = math.nan
    rel_error: float = math.nan
    error_code: str | None = None


@dataclass(frozen=True)
class BenchRow:
    degree: int
    mean_total_seconds: float
    mean_intersection_seconds: float
    mean_abs_error: float
    mean_rel_error: float
    instances: int
    failures: int


def parse_degrees(text: str) -> list[int]:
    """"3..10", "3,5,8" or a mix such as "3..5,8"."""
    degrees: list[int] = []
    try:
        for part in filter(None, (p.strip() for p in text.split(","))):
            if ".." in part:
                lo, hi = (int(v) for v in part.split("..", 1))
                degrees.extend(range(lo, hi + 1))
            else:
                degrees.append(int(part))
    except ValueError as e:
        raise InvalidInputError(f"Cannot parse degree list {text!r}") from e
    if any(d < 1 for d in degrees):
        raise InvalidInputError(f"Degrees must be positive; got {degrees}")
    return degrees


def instance_seed(seed: int, degree: int, index: int) -> int:
    return int(np.random.SeedSequence([seed, degree, index]).generate_state(1)[0])


def run_instance(
    degree: int, index: int, seed: int, settings: HyperdetSettings | None = None
) -> InstanceResult:
    """One generated instance through represent and representation_error; never raises HyperdetError."""
    if settings is not None:
        set_hyperdet_settings(settings)
    inst_seed = instance_seed(seed, degree, index)
    started = time.perf_counter()
    try:
        with run_context(f"d{degree}-{index}"):
            f = generate_random_hyperbolic(degree, inst_seed)
            rep = represent(f, (1.0, 0.0, 0.0), RepresentOptions(seed=inst_seed))
            total = time.perf_counter() - started
            error = representation_error(f, rep, seed=inst_seed)
    except HyperdetError as e:
        logger.warning(f"Instance d={degree} #{index} failed: [{e.ERROR_CODE}] {e.detail}")
        return InstanceResult(degree, index, ok=False, error_code=e.ERROR_CODE)
    return InstanceResult(
        degree,
        index,
        ok=True,
        total_seconds=total,
        intersection_seconds=rep.timings.intersection_seconds,
        abs_error=error.abs_error,
        rel_error=error.rel_error,
    )


def _mean(values: Sequence[float]) -> float:
    return float(np.mean(values)) if values else math.nan


def summarize(results: Sequence[InstanceResult], degrees: Sequence[int]) -> list[BenchRow]:
    rows = []
    for d in degrees:
        mine = [r for r in results if r.degree == d]
        if not mine:
            continue
        ok = [r for r in mine if r.ok]
        rows.append(
            BenchRow(
                degree=d,
                mean_total_seconds=_mean([r.total_seconds for r in ok]),
                mean_intersection_seconds=_mean([r.intersection_seconds for r in ok]),
                mean_abs_error=_mean([r.abs_error for r in ok]),
                mean_rel_error=_mean([r.rel_error for r in ok]),
                instances=len(mine),
                failures=len(mine) - len(ok),
            )
        )
    return rows


def run_bench(
    degrees: Sequence[int], instances: int, seed: int, threads: int = 1
) -> list[BenchRow]:
    jobs = [(d, k) for d in degrees for k in range(instances)]
    settings = get_hyperdet_settings()
    logger.info(f"Benchmark: {len(jobs)} instances over degrees {list(degrees)} with {threads} worker(s)")
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(run_instance, d, k, seed, settings) for d, k in jobs]
            results = [fut.result() for fut in futures]
    else:
        results = [run_instance(d, k, seed) for d, k in jobs]
    results.sort(key=lambda r: (r.degree, r.index))
    return summarize(results, degrees)


def format_table(rows: Sequence[BenchRow]) -> str:
    header = [title for _, title, _ in _COLUMNS]
    body = [[fmt.format(getattr(row, name)) for name, _, fmt in _COLUMNS] for row in rows]
    widths = [max(len(cell) for cell in column) for column in zip(header, *body, strict=True)]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(line, widths, strict=True)) for line in (header, *body)]
    return "\n".join(lines)


def write_csv(path: Path | str, rows: Sequence[BenchRow]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow([name for name, _, _ in _COLUMNS])
        for row in rows:
            writer.writerow([getattr(row, name) for name, _, _ in _COLUMNS])
    logger.info(f"Wrote {len(rows)} benchmark rows to {path}")


def cmd_bench(args: argparse.Namespace) -> int:
    degrees = parse_degrees(args.degrees)
    if args.instances < 0:
        raise InvalidInputError(f"--instances must be non-negative; got {args.instances}")
    rows = run_bench(degrees, args.instances, args.seed, get_hyperdet_settings().threads)
    if args.json:
        print(json.dumps([asdict(row) for row in rows], indent=2))
    else:
        print(format_table(rows))
    if args.csv:
        write_csv(args.csv, rows)
    if args.out:
        Path(args.out).write_text(format_table(rows) + "\n", encoding="utf-8")
    return EXIT_OK
