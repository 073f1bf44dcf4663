"""Shared pieces of the verification suites."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, TypeVar

from .._config import SuiteOptions
from .._models import CaseResult

T = TypeVar("T")

Task = Callable[[], list[CaseResult]]

FAILURE_LIMIT = 10


@dataclass(frozen=True)
class SuiteContext:
    """Options a suite may read while building its tasks."""

    seed: int
    samples: int
    options: SuiteOptions


@dataclass(frozen=True)
class Suite:
    """A named suite; `tasks` splits the work into independent pure callables."""

    name: str
    description: str
    tasks: Callable[[SuiteContext], list[Task]]


def plain(value: Any) -> Any:
    """JSON-ready copy: tuples become lists, integral rationals ints, others "p/q" strings."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    return value


def make_case(case_id: str, inputs: dict[str, Any], expected: Any, got: Any) -> CaseResult:
    """A case passes when expected and got are exactly equal."""
    expected, got = plain(expected), plain(got)
    return CaseResult(id=case_id, inputs=plain(inputs), expected=expected, got=got, passed=expected == got)


def failures(items: Iterable[T], bad: Callable[[T], bool], label: Callable[[T], str] = str) -> list[str]:
    """Labels of the first few items for which `bad` holds."""
    out = []
    for item in items:
        if bad(item):
            out.append(label(item))
            if len(out) >= FAILURE_LIMIT:
                break
    return out
