"""Pydantic wire models."""

from typing import Any

from pydantic import BaseModel, ConfigDict, Field
from pydantic.alias_generators import to_camel


# === Base class for camelCase serialization ===


class CamelModel(BaseModel):
    """Base model that serializes to camelCase."""

    model_config = ConfigDict(
        populate_by_name=True,
        alias_generator=to_camel,
    )


def success_envelope(data: CamelModel | None = None) -> dict:
    """Wrap response data in success envelope."""
    if data is None:
        return {"status": "success", "data": None}
    return {"status": "success", "data": data.model_dump(by_alias=True)}


# === Domain objects ===


class QuiverModel(BaseModel):
    """Quiver as {"vertices": n, "arrows": [[s, t], ...]}."""

    vertices: int = Field(ge=1)
    arrows: list[list[int]]


class RepModel(CamelModel):
    """Representation with rational matrices as "p/q" strings, row-major."""

    quiver: QuiverModel
    dims: list[int]
    arrow_maps: list[list[list[str]]]


class TubeObjectModel(BaseModel):
    """Tube object as {"rank": r, "socle": a, "length": l}."""

    rank: int = Field(ge=1)
    socle: int = Field(ge=0)
    length: int = Field(ge=1)


# === Reports ===


class CaseResult(CamelModel):
    """One verified claim."""

    id: str
    inputs: dict[str, Any]
    expected: Any
    got: Any
    passed: bool = Field(serialization_alias="pass", validation_alias="pass")


class SuiteSummary(CamelModel):
    """Pass/fail counts for a report."""

    total: int
    passed: int
    failed: int


class Report(CamelModel):
    """Result of running a verification suite."""

    suite: str
    seed: int
    cases: list[CaseResult]
    summary: SuiteSummary
    wall_time: float
    timestamp: str

    @property
    def ok(self) -> bool:
        return self.summary.failed == 0


class CyRow(CamelModel):
    """One row of the Dynkin Calabi-Yau table."""

    diagram: str
    coxeter_number: int
    n: int
    m: int
    reduced: str
    serre_h_shift: int | None


class WplSummary(CamelModel):
    """Numerical summary of a weight type."""

    weights: list[int]
    chi: str
    n: int
    p: int | None = None
    coxeter_order: int | None = None
    radical_rank: int | None = None
    identity_check: bool | None = None


class TwistCheckReport(CamelModel):
    """Result of a randomized twist functor check."""

    lattice: list[int]
    check: str
    seed: int
    samples: int
    passed: bool
    counterexample: dict[str, Any] | None = None


class TorsionQuery(CamelModel):
    """Classification of one class against a slope cut."""

    weights: list[int]
    theta: str
    vector: list[int]
    rank: int
    degree: str
    slope: str
    label: str = Field(serialization_alias="class", validation_alias="class")


class SplitSignReport(CamelModel):
    """Directional check of a torsion/free pair of classes."""

    slope_t: str
    slope_f: str
    chi_bar_ft: str
    passed: bool = Field(serialization_alias="pass", validation_alias="pass")


# === Errors ===


class ErrorDetail(BaseModel):
    """Error details."""

    message: str
    type: str


class ErrorResponse(BaseModel):
    """Error response."""

    status: str = "error"
    error: ErrorDetail
