# CLI Tests
"""Tests for the gapbound command-line surface."""
import csv
import io
import json
from pathlib import Path

import pytest

from cli import run
from cli.commands import EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE
from cli.models import CommandReport
from cli.output import normalize, render_csv, render_human, render_json
from gapbound.config import Config

SCHEMA_PATH = Path(__file__).resolve().parent.parent / "schemas" / "output.schema.json"


def _run_json(capsys, argv):
    code = run(argv + ["--json", "--quiet"])
    return code, json.loads(capsys.readouterr().out)


def test_reproduce_json_deterministic(capsys):
    """Test that reproduce passes and prints byte-identical JSON twice."""
    assert run(["reproduce", "--json", "--quiet"]) == EXIT_OK
    first = capsys.readouterr().out
    assert run(["reproduce", "--json", "--quiet"]) == EXIT_OK
    second = capsys.readouterr().out
    assert first == second

    document = json.loads(first)
    assert document["passed"] is True
    assert [row["constant"] for row in document["rows"]] == [
        "c0", "beta0", "phi0", "h(c0)", "threshold_v1", "threshold_v2",
    ]
    for row in document["rows"]:
        assert set(row) == {"constant", "computed", "reference", "tolerance", "pass"}
        assert row["pass"] is True


def test_json_matches_schema_keys(capsys):
    """Test a JSON document against the top-level keys of the shipped schema."""
    schema = json.loads(SCHEMA_PATH.read_text(encoding="utf-8"))
    code, document = _run_json(capsys, ["large-gaps", "--variant", "v2"])
    assert code == EXIT_OK
    assert set(schema["required"]) == set(document)
    assert document["command"] in schema["properties"]["command"]["enum"]


def test_scan_two_steps(capsys):
    """Test that a two-step scan emits the endpoints only."""
    code, document = _run_json(capsys, ["scan", "--c", "0.5042", "--steps", "2"])
    assert code == EXIT_OK
    assert [row["beta"] for row in document["rows"]] == [0.45, 0.5]
    assert document["rows"][1]["case"] == "case1"


def test_scan_csv_header(capsys):
    """Test the fixed CSV header of scan."""
    assert run(["scan", "--steps", "5", "--csv", "--quiet"]) == EXIT_OK
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert rows[0] == ["beta", "phi0", "maximizer", "g_max", "h_upper", "case"]
    assert len(rows) == 6


def test_scan_invalid_range():
    """Test that an invalid scan range is a usage error."""
    assert run(["scan", "--steps", "1", "--quiet"]) == EXIT_USAGE
    assert run(["scan", "--beta-min", "0.5", "--beta-max", "0.4", "--quiet"]) == EXIT_USAGE


def test_verify_pass_and_fail(capsys):
    """Test verify exit codes on both sides of c0."""
    assert run(["verify", "--grid", "2000", "--quiet"]) == EXIT_OK
    assert run(["verify", "--c", "0.55", "--grid", "2000", "--quiet"]) == EXIT_NUMERICAL


def test_verify_two_point_grid_warns(capsys):
    """Test that a two-point grid is reported with a warning."""
    code, document = _run_json(capsys, ["verify", "--grid", "2"])
    assert code == EXIT_OK
    assert document["warnings"]
    assert document["summary"]["grid_size"] == 2


def test_large_gaps_bracket_error():
    """Test that a non-straddling bracket exits with a numerical failure."""
    assert run(["large-gaps", "--variant", "v2", "--bracket", "1", "2", "--quiet"]) == EXIT_NUMERICAL


def test_large_gaps_table(capsys):
    """Test the threshold and the table around it."""
    code, document = _run_json(capsys, ["large-gaps", "--variant", "v1"])
    assert code == EXIT_OK
    assert document["summary"]["threshold_v1"] == pytest.approx(5.5602, abs=1e-4)
    assert len(document["rows"]) == 5
    assert all(row["variant"] == "v1" for row in document["rows"])


def test_oracle_links(capsys):
    """Test the oracle audit at T = 10^4."""
    code, document = _run_json(capsys, ["oracle", "--t-exp", "4", "--c", "0.5042"])
    assert code == EXIT_OK
    links = {row["link"]: row for row in document["rows"]}
    assert set(links) == {"i", "ii", "iii", "iv", "v"}
    assert all(links[name]["passed"] for name in ("i", "ii", "v"))
    assert document["summary"]["slack"] > 0.0


def test_oracle_b1_only(capsys):
    """Test the collapsed chain through the CLI."""
    code, document = _run_json(capsys, ["oracle", "--t-exp", "3", "--scheme", "b1-only"])
    assert code == EXIT_OK
    assert document["summary"]["S"] == 0.0
    assert document["summary"]["ratio"] == 0.0


def test_out_path(tmp_path, capsys):
    """Test writing the report to a file instead of stdout."""
    target = tmp_path / "scan.json"
    assert run(["scan", "--steps", "3", "--json", "--out", str(target), "--quiet"]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert len(json.loads(target.read_text(encoding="utf-8"))["rows"]) == 3


def test_usage_errors(capsys):
    """Test argparse failures and invalid tolerances."""
    assert run([]) == EXIT_USAGE
    assert run(["frobnicate"]) == EXIT_USAGE
    assert run(["reproduce", "--tol-c", "-1", "--quiet"]) == EXIT_USAGE


def test_invalid_environment(clean_env):
    """Test that configuration errors exit with a usage error."""
    clean_env.setenv("GAPBOUND_TOL_C", "0")
    Config.refresh()
    assert run(["verify", "--grid", "10", "--quiet"]) == EXIT_USAGE


def test_stage_logging_goes_to_stderr(capsys):
    """Test that stage lines stay off stdout."""
    assert run(["verify", "--grid", "10", "--json"]) == EXIT_OK
    captured = capsys.readouterr()
    json.loads(captured.out)
    assert "[done]" in captured.err


def test_normalize_rounds_to_twelve_digits():
    """Test machine-format float rounding."""
    assert normalize({"x": 0.1234567890123456, "n": 3, "b": True}) == {
        "x": 0.123456789012,
        "n": 3,
        "b": True,
    }


def test_renderers_share_content():
    """Test that all three formats carry the same rows."""
    report = CommandReport(
        command="scan",
        passed=True,
        summary={"c": 0.5},
        rows=[{"beta": 0.45, "phi0": None, "case": "case2"}],
    )
    assert json.loads(render_json(report))["rows"][0]["beta"] == 0.45
    assert render_csv(report) == "beta,phi0,case\n0.45,,case2\n"
    assert "case2" in render_human(report)


def test_non_finite_floats_serialize_as_null():
    """Test that NaN and infinity become null in JSON and empty CSV cells."""
    report = CommandReport(
        command="scan",
        passed=False,
        summary={"max_value": float("nan")},
        rows=[{"beta": 0.45, "h_upper": float("inf")}],
    )
    document = json.loads(render_json(report))
    assert document["summary"]["max_value"] is None
    assert document["rows"][0]["h_upper"] is None
    assert render_csv(report) == "beta,h_upper\n0.45,\n"
    assert normalize(float("-inf")) is None
