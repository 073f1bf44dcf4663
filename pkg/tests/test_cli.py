"""Tests for the command-line interface."""

import json
import textwrap
from pathlib import Path

from fcy_workbench.__main__ import main


def test_wpl_command(capsys):
    assert main(["wpl", "--weights", "2,3,7"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["status"] == "success"
    assert data["data"]["chi"] == "-1/42"
    assert data["data"]["p"] is None


def test_wpl_tubular(capsys):
    assert main(["wpl", "--weights", "3,3,3"]) == 0
    data = json.loads(capsys.readouterr().out)["data"]
    assert data["chi"] == "0"
    assert data["coxeterOrder"] == 3
    assert data["identityCheck"] is True


def test_torsion_command(capsys):
    vector = ",".join(["1"] * 6)
    assert main(["torsion", "--weights", "2,2,2,2", "--theta", "0", "--class", vector]) == 0
    data = json.loads(capsys.readouterr().out)["data"]
    assert data["class"] == "T"
    assert data["slope"] == "inf"


def test_torsion_boundary_policy(capsys):
    vector = ",".join(["1"] * 6)
    assert main(["torsion", "--weights", "2,2,2,2", "--theta", "inf", "--class", vector, "--policy", "torsion"]) == 0
    assert json.loads(capsys.readouterr().out)["data"]["class"] == "T"


def test_torsion_wrong_length(capsys):
    assert main(["torsion", "--weights", "2,2,2,2", "--theta", "0", "--class", "1,0"]) == 2
    data = json.loads(capsys.readouterr().out)
    assert data["status"] == "error"
    assert data["error"]["type"] == "InvalidInput"


def test_torsion_non_tubular(capsys):
    assert main(["torsion", "--weights", "2,3,7", "--theta", "0", "--class", "1"]) == 2
    assert json.loads(capsys.readouterr().out)["error"]["type"] == "NonTubular"


def test_twist_command(capsys):
    assert main(["twist", "--lattice", "2,2,2,2", "--check", "isometry", "--seed", "5", "--samples", "30"]) == 0
    data = json.loads(capsys.readouterr().out)["data"]
    assert data["passed"] is True
    assert data["seed"] == 5


def test_cy_table_command(capsys):
    assert main(["cy-table", "--diagrams", "A1,D4"]) == 0
    rows = json.loads(capsys.readouterr().out)["data"]
    assert [(r["diagram"], r["n"], r["m"]) for r in rows] == [("A1", 1, 0), ("D4", 3, 2)]


def test_cy_table_reads_config(tmp_path: Path, capsys):
    config_file = tmp_path / "workbench.yaml"
    config_file.write_text(textwrap.dedent("""\
        workbench:
          suites:
            dynkin:
              table: [A2, E7]
    """))
    assert main(["cy-table", "--config", str(config_file)]) == 0
    rows = json.loads(capsys.readouterr().out)["data"]
    assert [(r["diagram"], r["n"], r["m"]) for r in rows] == [("A2", 3, 1), ("E7", 9, 8)]


def test_cy_table_bad_diagram(capsys):
    assert main(["cy-table", "--diagrams", "Q9"]) == 2
    assert json.loads(capsys.readouterr().out)["error"]["type"] == "InvalidQuiver"


def test_run_writes_report(tmp_path: Path, capsys):
    out = tmp_path / "report.json"
    code = main(["run", "--suite", "tube", "--rank", "1", "--rank", "2", "--max-length", "3", "--out", str(out)])
    assert code == 0
    data = json.loads(out.read_text())
    assert data["summary"]["failed"] == 0
    assert {case["inputs"]["rank"] for case in data["cases"]} == {1, 2}
    assert "Ran suite tube:" in capsys.readouterr().err


def test_run_with_config(tmp_path: Path, capsys):
    config_file = tmp_path / "workbench.yaml"
    config_file.write_text(textwrap.dedent("""\
        workbench:
          seed: 3
          suites:
            tube:
              ranks: [3]
              max_length: 2
    """))
    assert main(["run", "--suite", "tube", "--config", str(config_file), "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "id,inputs,expected,got,pass"
    assert all(line.startswith("tube/r3/") for line in lines[1:])


def test_run_unknown_suite(capsys):
    assert main(["run", "--suite", "braid"]) == 2
    assert json.loads(capsys.readouterr().out)["error"]["type"] == "UnknownSuite"


def test_run_unknown_format(capsys):
    assert main(["run", "--suite", "tube", "--format", "xml"]) == 2
    assert json.loads(capsys.readouterr().out)["error"]["type"] == "UnknownFormat"
