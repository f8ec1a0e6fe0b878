# ABOUTME: Tests for the hyperdet command line: exit codes, stdout summaries and the file round trip.

import json

import numpy as np
import pytest

from hyperdet.cli.main import main
from hyperdet.poly.parser import parse_polynomial
from tests.conftest import CONIC_TEXT, QUARTIC_M1, QUARTIC_TEXT


def _represent_conic(tmp_path) -> str:
    out = tmp_path / "rep.json"
    assert main(["represent", "--poly", CONIC_TEXT, "--out", str(out)]) == 0
    return str(out)


def test_represent_conic_prints_summary(capsys):
    assert main(["represent", "--poly", CONIC_TEXT]) == 0
    line = capsys.readouterr().out.strip().splitlines()[-1]
    assert line.startswith("d=2 c=")
    rel_error = float(line.split("rel_error=")[1].split()[0])
    assert rel_error <= 1e-12


def test_represent_json_document(capsys):
    assert main(["represent", "--poly", CONIC_TEXT, "--json"]) == 0
    captured = capsys.readouterr()
    doc = json.loads(captured.out)
    assert "d=2 c=" in captured.err
    assert doc["d"] == 2
    assert doc["direction"] == [1.0, 0.0, 0.0]
    assert doc["diagnostics"]["rank"] == 12
    assert doc["diagnostics"]["error"]["abs_error"] <= 1e-12


def test_represent_then_verify(tmp_path, capsys):
    rep = _represent_conic(tmp_path)
    assert main(["verify", "--poly", CONIC_TEXT, "--rep", rep]) == 0
    out = capsys.readouterr().out
    assert "definite=True" in out
    assert "hyperbolic=True" in out


def test_verify_fails_on_indefinite_pencil(tmp_path, capsys):
    rep = _represent_conic(tmp_path)
    capsys.readouterr()
    doc = json.loads((tmp_path / "rep.json").read_text())
    doc["M1"] = [[[-re, -im] for re, im in row] for row in doc["M1"]]
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps(doc))
    assert main(["verify", "--poly", CONIC_TEXT, "--rep", str(broken), "--json"]) == 6
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] is False
    assert report["definite"] is False


def test_verify_degree_mismatch(tmp_path, capsys):
    rep = _represent_conic(tmp_path)
    assert main(["verify", "--poly", QUARTIC_TEXT, "--rep", rep]) == 5
    assert "DEGREE_MISMATCH" in capsys.readouterr().err


def test_parse_error_exits_one(capsys):
    assert main(["represent", "--poly", "x^2 + $y"]) == 1
    assert "POLYNOMIAL_SYNTAX" in capsys.readouterr().err


def test_not_hyperbolic_exits_two(capsys):
    assert main(["represent", "--poly", "x^2 + y^2 + z^2"]) == 2
    assert "NOT_HYPERBOLIC" in capsys.readouterr().err


def test_quartic_nodes_exit_three():
    # the automatic path cannot split an intersection containing the real nodes
    assert main(["represent", "--poly", QUARTIC_TEXT]) == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["represent"],
        ["represent", "--poly", CONIC_TEXT, "--in", "poly.json"],
        ["represent", "--in", "does-not-exist.json"],
        ["represent", "--poly", CONIC_TEXT, "--e", "1,0"],
        ["represent", "--poly", CONIC_TEXT, "--e", "0,1,0"],
    ],
)
def test_invalid_input_exits_one(argv):
    assert main(argv) == 1


def test_bad_config_exits_one(tmp_path):
    config = tmp_path / "hyperdet.yaml"
    config.write_text("hyperdet:\n  max_retries: -1\n")
    assert main(["represent", "--poly", CONIC_TEXT, "--config", str(config)]) == 1


def test_config_file_is_applied(tmp_path):
    config = tmp_path / "hyperdet.yaml"
    config.write_text("hyperdet:\n  hyperbolicity_trials: 5\n")
    assert main(["represent", "--poly", CONIC_TEXT, "--config", str(config)]) == 0


def test_example_quartic_from_files(config_dir, tmp_path):
    out = tmp_path / "quartic_rep.json"
    argv = [
        "represent",
        "--in",
        str(config_dir / "poly.json"),
        "--points",
        str(config_dir / "points.json"),
        "--basis",
        str(config_dir / "basis.json"),
        "--out",
        str(out),
    ]
    assert main(argv) == 0
    doc = json.loads(out.read_text())
    assert doc["c"] == pytest.approx(256.0, rel=1e-6)
    m1 = np.array([[complex(re, im) for re, im in row] for row in doc["M1"]])
    np.testing.assert_allclose(m1, QUARTIC_M1, atol=1e-8)
    assert any("supplied" in w for w in doc["diagnostics"]["warnings"])


def test_example_quartic_with_points_and_interlacer(config_dir):
    argv = [
        "represent",
        "--in",
        str(config_dir / "poly.json"),
        "--points",
        str(config_dir / "points.json"),
        "--interlacer",
        str(config_dir / "interlacer.json"),
    ]
    assert main(argv) == 0


def test_generate_prints_polynomial(capsys):
    assert main(["generate", "--degree", "3", "--seed", "4"]) == 0
    f = parse_polynomial(capsys.readouterr().out.strip())
    assert f.degree == 3
    assert f.coefficient((3, 0, 0)) == pytest.approx(1.0, abs=1e-9)


def test_generate_represent_verify_flow(tmp_path):
    poly = tmp_path / "f.json"
    rep = tmp_path / "rep.json"
    assert main(["generate", "--degree", "3", "--seed", "2", "--out", str(poly)]) == 0
    assert main(["represent", "--in", str(poly), "--seed", "2", "--out", str(rep)]) == 0
    assert main(["verify", "--in", str(poly), "--rep", str(rep)]) == 0


def test_bench_small_table(tmp_path, capsys):
    csv_path = tmp_path / "bench.csv"
    assert main(["bench", "--degrees", "3", "--instances", "1", "--csv", str(csv_path)]) == 0
    out = capsys.readouterr().out
    assert "relative error" in out
    assert csv_path.read_text().startswith("degree,mean_total_seconds")
