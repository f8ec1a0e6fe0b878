# ABOUTME: Observability module for hyperdet.
# ABOUTME: Process-wide logging setup with a per-run identifier on every record.

from hyperdet.common.observability.logging_utils import (
    RunFilter,
    StageTimer,
    get_logger,
    get_run_id,
    run_context,
    set_log_level,
    set_run_id,
    setup_logging,
    stage_timer,
)

__all__ = [
    "RunFilter",
    "StageTimer",
    "get_logger",
    "get_run_id",
    "run_context",
    "set_log_level",
    "set_run_id",
    "setup_logging",
    "stage_timer",
]
