"""Report export as JSON or CSV."""

from __future__ import annotations

import json
from typing import Sequence

import polars as pl

from ._errors import unknown_format
from ._models import CamelModel, Report

FORMATS = ("json", "csv")

# Fields that vary between otherwise identical runs
TIMING_FIELDS = {"timestamp", "wall_time"}


def _cell(value: object) -> str:
    return json.dumps(value, sort_keys=True)


def cases_frame(report: Report) -> pl.DataFrame:
    """One row per case; structured columns hold compact JSON."""
    return pl.DataFrame(
        {
            "id": [c.id for c in report.cases],
            "inputs": [_cell(c.inputs) for c in report.cases],
            "expected": [_cell(c.expected) for c in report.cases],
            "got": [_cell(c.got) for c in report.cases],
            "pass": [c.passed for c in report.cases],
        },
        schema={"id": pl.String, "inputs": pl.String, "expected": pl.String, "got": pl.String, "pass": pl.Boolean},
    )


def export(report: Report, fmt: str) -> bytes:
    if fmt == "json":
        return report.model_dump_json(by_alias=True, indent=2).encode()
    if fmt == "csv":
        return cases_frame(report).write_csv().encode()
    raise unknown_format(fmt)


def deterministic_json(report: Report) -> str:
    """The report without timing fields; equal seeds give equal strings."""
    return report.model_dump_json(by_alias=True, exclude=TIMING_FIELDS)


def export_rows(rows: Sequence[CamelModel], fmt: str) -> bytes:
    """Export a list of flat models, e.g. the Calabi-Yau table."""
    data = [row.model_dump(by_alias=True) for row in rows]
    if fmt == "json":
        return json.dumps({"status": "success", "data": data}, indent=2).encode()
    if fmt == "csv":
        return pl.DataFrame(data).write_csv().encode()
    raise unknown_format(fmt)
