"""End-to-end CLI tests: exit codes, stdout, and frozen JSON reports."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from gradealg.cli import main
from gradealg.schemas import INPUT_SCHEMA, OUTPUT_SCHEMAS

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

GOLDEN_RUNS = [
    ("check-iso", "split.json", [], "check_iso_split.json", 0),
    ("check-iso", "notsplit.json", [], "check_iso_notsplit.json", 3),
    ("presentation", "twopoints.json", [], "presentation_twopoints.json", 0),
    ("hilbert", "twopoints.json", [], "hilbert_twopoints.json", 0),
    (
        "cohomology",
        "twopoints.json",
        ["--module", "R", "--window=-4:1"],
        "cohomology_r_twopoints.json",
        0,
    ),
    (
        "cohomology",
        "path.json",
        ["--module", "A", "--window=-3:0"],
        "cohomology_a_path.json",
        0,
    ),
    ("gencm", "edge.json", [], "gencm_edge.json", 0),
    ("gencm", "path.json", [], "gencm_path.json", 3),
    ("dim", "path.json", [], "dim_path.json", 0),
]


@pytest.mark.parametrize("command,spec,extra,golden,expected", GOLDEN_RUNS)
def test_golden_reports(tmp_path, command, spec, extra, golden, expected):
    out = tmp_path / "report.json"
    argv = [command, "--input", str(DATA / spec), *extra, "--json", str(out)]
    assert main(argv) == expected
    assert out.read_bytes() == (GOLDEN / golden).read_bytes()


def test_reports_validate_against_published_schemas():
    for command, spec, extra, golden, _ in GOLDEN_RUNS:
        report = json.loads((GOLDEN / golden).read_text())
        import jsonschema

        jsonschema.validate(report, OUTPUT_SCHEMAS[command])


def test_stdout_summary(capsys):
    assert main(["check-iso", "--input", str(DATA / "split.json")]) == 0
    out = capsys.readouterr().out
    assert "isomorphic: true" in out
    assert "verified: true" in out
    assert "B: x1, x2" in out

    assert main(["check-iso", "--input", str(DATA / "notsplit.json")]) == 3
    out = capsys.readouterr().out
    assert "isomorphic: false" in out
    assert "reason: not-split" in out


def test_missing_input_file(capsys):
    assert main(["dim", "--input", "no/such/file.json"]) == 1
    assert "error:" in capsys.readouterr().err


def test_invalid_problem_description(capsys):
    assert main(["dim", "--input", str(DATA / "missing_i.json")]) == 1
    err = capsys.readouterr().err
    assert "invalid problem description" in err


def test_vertex_limit_is_internal_error(capsys):
    assert main(["dim", "--input", str(DATA / "toobig.json")]) == 2
    assert "error:" in capsys.readouterr().err


def test_usage_errors_exit_one(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate", "--input", "x.json"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["dim"])
    assert exc.value.code == 1


def test_window_must_contain_zero(capsys):
    code = main(["cohomology", "--input", str(DATA / "twopoints.json"),
                 "--window", "1:2"])
    assert code == 1
    assert "window" in capsys.readouterr().err


def test_bad_window_text(capsys):
    code = main(["cohomology", "--input", str(DATA / "twopoints.json"),
                 "--window", "5"])
    assert code == 1
    code = main(["cohomology", "--input", str(DATA / "twopoints.json"),
                 "--window=2:-2"])
    assert code == 1


def test_module_r_needs_a_join(capsys):
    code = main(["cohomology", "--input", str(DATA / "notsplit.json"),
                 "--module", "R"])
    assert code == 1
    assert "split" in capsys.readouterr().err


def test_zero_ideal_in_quotient_rejected(tmp_path, capsys):
    spec = {"field": "Q", "variables": ["x1", "x2"], "J": ["x1*x2"],
            "I": ["x1 + x2"]}
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(spec))
    code = main(["cohomology", "--input", str(path), "--module", "R"])
    assert code == 1
    assert "variable" in capsys.readouterr().err


def test_field_override(tmp_path, capsys):
    out = tmp_path / "r.json"
    code = main(["check-iso", "--input", str(DATA / "split.json"),
                 "--field", "GF7", "--json", str(out)])
    assert code == 0
    assert json.loads(out.read_text())["field"] == "GF(7)"

    code = main(["dim", "--input", str(DATA / "path.json"), "--field", "GF(6)"])
    assert code == 1


def test_facets_and_ideal_descriptions_agree(tmp_path):
    by_facets = {"field": "Q", "variables": ["x1", "x2"],
                 "facets": [[1], [2]], "I": ["x1", "x2"]}
    path = tmp_path / "facets.json"
    path.write_text(json.dumps(by_facets))
    out_a = tmp_path / "a.json"
    out_b = tmp_path / "b.json"
    assert main(["dim", "--input", str(DATA / "twopoints.json"),
                 "--json", str(out_a)]) == 0
    assert main(["dim", "--input", str(path), "--json", str(out_b)]) == 0
    assert json.loads(out_a.read_text()) == json.loads(out_b.read_text())


def test_allow_linear_flag(tmp_path, capsys):
    spec = {"field": "Q", "variables": ["x1", "x2"], "J": ["x1 - x2"],
            "I": ["x1"]}
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(spec))
    assert main(["check-iso", "--input", str(path)]) == 1
    assert "linear" in capsys.readouterr().err.lower()
    with pytest.warns(UserWarning):
        assert main(["check-iso", "--input", str(path), "--allow-linear"]) == 0


def test_published_schema_files_match_module():
    docs = Path(__file__).parent.parent / "docs" / "schemas"
    assert json.loads((docs / "input.schema.json").read_text()) == INPUT_SCHEMA
    for command, schema in OUTPUT_SCHEMAS.items():
        published = json.loads((docs / f"{command}.output.schema.json").read_text())
        assert published == schema


def test_console_script_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "gradealg.cli", "dim",
         "--input", str(DATA / "path.json")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    proc = subprocess.run(
        [sys.executable, "-m", "gradealg.cli", "gencm",
         "--input", str(DATA / "path.json")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 3
