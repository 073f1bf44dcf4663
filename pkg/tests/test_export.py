"""Tests for report export."""

import io
import json

import polars as pl
import pytest

from fcy_workbench._dynkin import cy_table
from fcy_workbench._errors import WorkbenchError
from fcy_workbench._export import cases_frame, deterministic_json, export, export_rows
from fcy_workbench._models import Report
from fcy_workbench._runner import run_suite


@pytest.fixture
def report(small_config) -> Report:
    return run_suite("tube", small_config)


def test_json_export_round_trips(report):
    payload = export(report, "json")
    data = json.loads(payload)
    assert data["suite"] == "tube"
    assert "wallTime" in data
    assert all("pass" in case for case in data["cases"])
    assert Report.model_validate_json(payload) == report


def test_csv_export(report):
    text = export(report, "csv").decode()
    assert len(text.strip().splitlines()) == len(report.cases) + 1
    frame = pl.read_csv(io.StringIO(text))
    assert frame.columns == ["id", "inputs", "expected", "got", "pass"]


def test_cases_frame(report):
    frame = cases_frame(report)
    assert frame.height == len(report.cases)
    assert frame["pass"].all()


def test_unknown_format(report):
    with pytest.raises(WorkbenchError, match="Unknown export format: 'xml'"):
        export(report, "xml")


def test_deterministic_json_drops_timing(report):
    data = json.loads(deterministic_json(report))
    assert "timestamp" not in data
    assert "wallTime" not in data
    assert data["seed"] == report.seed


def test_export_rows():
    rows = cy_table(["A2", "D4"])
    data = json.loads(export_rows(rows, "json"))
    assert data["status"] == "success"
    assert [row["diagram"] for row in data["data"]] == ["A2", "D4"]
    assert data["data"][1]["reduced"] == "2/3"

    frame = pl.read_csv(io.BytesIO(export_rows(rows, "csv")))
    assert frame["coxeterNumber"].to_list() == [3, 6]

    with pytest.raises(WorkbenchError, match="Unknown export format"):
        export_rows(rows, "xml")
