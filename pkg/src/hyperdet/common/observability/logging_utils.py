# ABOUTME: Process-wide logging for hyperdet: stderr handler, run-id filter, level parsing.
# ABOUTME: run_context scopes a run id (CLI command, bench instance); stage_timer times and logs a stage.

from __future__ import annotations

import logging
import os
import sys
import time
from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from typing import TextIO

LogLevelLike = int | str

DEFAULT_RUN_ID = "default-run-id"
DEFAULT_FORMAT = "%(asctime)s - %(name)s - [%(run_id)s] - %(levelname)s - %(message)s"

_logging_configured: bool = False

_run_id_var: ContextVar[str] = ContextVar("run_id", default=DEFAULT_RUN_ID)


class RunFilter(logging.Filter):
    """Stamp every record with the current run id so `%(run_id)s` works in formats."""

    def filter(self, record: logging.LogRecord) -> bool:  # type: ignore[override]
        record.run_id = _run_id_var.get()
        return True


def set_run_id(run_id: str) -> None:
    _run_id_var.set(run_id)


def get_run_id() -> str:
    """Current run id, or "default-run-id" outside any run."""
    return _run_id_var.get()


@contextmanager
def run_context(run_id: str) -> Iterator[str]:
    """Scope a run id to a block; the previous id is restored on exit."""
    token = _run_id_var.set(run_id)
    try:
        yield run_id
    finally:
        _run_id_var.reset(token)


def _parse_log_level(level: LogLevelLike | None) -> int:
    """int, numeric string or level name; anything unrecognised means INFO."""
    if level is None:
        return logging.INFO
    if isinstance(level, int):
        return max(logging.NOTSET, min(logging.CRITICAL, level))
    value = str(level).strip()
    if value.isdigit():
        return _parse_log_level(int(value))
    return logging.getLevelNamesMapping().get(value.upper(), logging.INFO)


def setup_logging(
    level: LogLevelLike | None = None,
    fmt: str | None = None,
    force: bool = False,
    stream: TextIO | None = None,
) -> None:
    """
    Configure the root logger once (again with force=True).

    Level precedence: the `level` argument, then LOG_LEVEL, then INFO.
    Records go to standard error unless `stream` is given; standard output is
    reserved for command results (summary lines, bench tables, JSON documents).
    """
    global _logging_configured

    if _logging_configured and not force:
        return

    effective_level = _parse_log_level(level if level is not None else os.getenv("LOG_LEVEL"))
    root_logger = logging.getLogger()
    for handler in list(root_logger.handlers):
        root_logger.removeHandler(handler)
    root_logger.setLevel(effective_level)

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setLevel(effective_level)
    handler.setFormatter(logging.Formatter(fmt or DEFAULT_FORMAT))
    handler.addFilter(RunFilter())
    root_logger.addHandler(handler)

    _logging_configured = True


def get_logger(name: str) -> logging.Logger:
    if not _logging_configured:
        setup_logging()
    return logging.getLogger(name)


def set_log_level(level: LogLevelLike) -> None:
    """Adjust the root logger and its handlers at runtime."""
    numeric_level = _parse_log_level(level)
    root_logger = logging.getLogger()
    root_logger.setLevel(numeric_level)
    for handler in root_logger.handlers:
        handler.setLevel(numeric_level)


@dataclass
class StageTimer:
    stage: str
    seconds: float = 0.0


@contextmanager
def stage_timer(logger: logging.Logger, stage: str) -> Iterator[StageTimer]:
    """Time a pipeline stage: DEBUG on entry, INFO with the elapsed time on exit.

    The timer's `seconds` is filled in even when the stage raises.
    """
    timer = StageTimer(stage)
    logger.debug(f"Stage {stage} started")
    started = time.perf_counter()
    try:
        yield timer
    finally:
        timer.seconds = time.perf_counter() - started
        logger.info(f"Stage {stage} finished in {timer.seconds:.3f}s")
