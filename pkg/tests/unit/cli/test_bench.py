# ABOUTME: Tests for the benchmark sweep: degree parsing, seeding, summaries and output formats.

import math

import pytest

from hyperdet.cli.bench import (
    BenchRow,
    InstanceResult,
    format_table,
    instance_seed,
    parse_degrees,
    run_bench,
    run_instance,
    summarize,
    write_csv,
)
from hyperdet.errors import InvalidInputError


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("3..6", [3, 4, 5, 6]),
        ("3,5,8", [3, 5, 8]),
        ("3..5,8", [3, 4, 5, 8]),
        (" 4 ", [4]),
    ],
)
def test_parse_degrees(text, expected):
    assert parse_degrees(text) == expected


@pytest.mark.parametrize("text", ["three", "3..x", "0..2"])
def test_parse_degrees_rejects(text):
    with pytest.raises(InvalidInputError):
        parse_degrees(text)


def test_instance_seed_depends_on_all_parts():
    base = instance_seed(0, 3, 0)
    assert base == instance_seed(0, 3, 0)
    assert len({base, instance_seed(1, 3, 0), instance_seed(0, 4, 0), instance_seed(0, 3, 1)}) == 4


def test_summarize_counts_failures():
    results = [
        InstanceResult(3, 0, ok=True, total_seconds=1.0, intersection_seconds=0.5, abs_error=1e-12, rel_error=1e-13),
        InstanceResult(3, 1, ok=True, total_seconds=3.0, intersection_seconds=1.5, abs_error=3e-12, rel_error=3e-13),
        InstanceResult(3, 2, ok=False, error_code="TRANSVERSALITY_FAILURE"),
        InstanceResult(4, 0, ok=False, error_code="RANK_DEFICIENT"),
    ]
    rows = summarize(results, [3, 4, 5])
    assert [r.degree for r in rows] == [3, 4]
    assert rows[0].instances == 3
    assert rows[0].failures == 1
    assert rows[0].mean_total_seconds == pytest.approx(2.0)
    assert rows[0].mean_rel_error == pytest.approx(2e-13)
    assert rows[1].failures == 1
    assert math.isnan(rows[1].mean_abs_error)


def test_run_instance_succeeds_on_cubic():
    result = run_instance(3, 0, seed=0)
    assert result.ok, result.error_code
    assert result.rel_error <= 1e-6
    assert result.total_seconds >= result.intersection_seconds


def test_run_bench_small():
    rows = run_bench([3], instances=2, seed=0)
    assert len(rows) == 1
    assert rows[0].degree == 3
    assert rows[0].instances == 2
    assert rows[0].failures == 0


def test_format_table_and_csv(tmp_path):
    rows = [BenchRow(3, 0.01, 0.004, 2.5e-13, 1.1e-14, 20, 0)]
    table = format_table(rows).splitlines()
    assert table[0].split()[:2] == ["d", "time"]
    assert "1.10e-14" in table[1]
    path = tmp_path / "out" / "bench.csv"
    write_csv(path, rows)
    lines = path.read_text().splitlines()
    assert lines[0] == (
        "degree,mean_total_seconds,mean_intersection_seconds,mean_abs_error,mean_rel_error,instances,failures"
    )
    assert lines[1].startswith("3,0.01,")
