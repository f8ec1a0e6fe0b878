# ABOUTME: Unit tests for the run-id log filter and log level handling.
# ABOUTME: Verifies get_run_id reflects set_run_id and that records carry the run id.

import logging

from hyperdet.common.observability.logging_utils import (
    RunFilter,
    get_logger,
    get_run_id,
    run_context,
    set_log_level,
    set_run_id,
    setup_logging,
    stage_timer,
)


def test_get_run_id_default_when_unset():
    set_run_id("default-run-id")
    assert get_run_id() == "default-run-id"


def test_get_run_id_reflects_set():
    set_run_id("d5-3")
    assert get_run_id() == "d5-3"
    set_run_id("default-run-id")


def test_run_filter_injects_run_id():
    set_run_id("bench-7")
    record = logging.LogRecord("hyperdet", logging.INFO, __file__, 1, "msg", None, None)
    assert RunFilter().filter(record) is True
    assert record.run_id == "bench-7"
    set_run_id("default-run-id")


def test_setup_logging_writes_to_stderr(capsys):
    setup_logging("INFO", force=True)
    get_logger("hyperdet.test").info("to stderr")
    captured = capsys.readouterr()
    assert "to stderr" in captured.err
    assert "to stderr" not in captured.out


def test_set_log_level_accepts_names_and_numbers():
    setup_logging("INFO", force=True)
    set_log_level("debug")
    assert logging.getLogger().level == logging.DEBUG
    set_log_level("30")
    assert logging.getLogger().level == logging.WARNING
    set_log_level("not-a-level")
    assert logging.getLogger().level == logging.INFO


def test_run_context_restores_previous_id():
    set_run_id("outer")
    with run_context("d4-2") as run_id:
        assert run_id == "d4-2"
        assert get_run_id() == "d4-2"
    assert get_run_id() == "outer"
    set_run_id("default-run-id")


def test_stage_timer_logs_elapsed_time(capsys):
    setup_logging("INFO", force=True)
    with stage_timer(get_logger("hyperdet.test"), "solve") as timer:
        pass
    assert timer.stage == "solve"
    assert timer.seconds >= 0.0
    assert "Stage solve finished" in capsys.readouterr().err


def test_stage_timer_records_time_when_stage_fails():
    setup_logging("INFO", force=True)
    timer = None
    try:
        with stage_timer(get_logger("hyperdet.test"), "intersection") as timer:
            raise RuntimeError("boom")
    except RuntimeError:
        pass
    assert timer is not None
    assert timer.seconds >= 0.0
