"""Tubular weight types: Euler characteristic scan and lattice invariants."""

from __future__ import annotations

from fractions import Fraction
from functools import partial

from .._linalg import ExactMatrix
from .._models import CaseResult
from .._wpl import (
    TUBULAR_TYPES,
    WeightType,
    bilinear_identity_holds,
    canonical_cartan,
    coxeter_period,
    enumerate_weight_types,
    euler_characteristic,
    ordinary_point_class,
    radical_rank,
    rank_degree,
    tubular_lattice,
)
from ._base import Suite, SuiteContext, Task, failures, make_case

EULER_EXAMPLES = {
    (2, 2, 2, 2): Fraction(0),
    (2, 3, 7): Fraction(-1, 42),
    (2, 2): Fraction(1),
    (3, 3, 3): Fraction(0),
    (2, 3, 5): Fraction(1, 30),
}


def tubular_within(max_sum: int) -> list[tuple[int, ...]]:
    """The tubular types an enumeration up to `max_sum` must find."""
    return sorted(w for w in TUBULAR_TYPES if sum(w) <= max_sum)


def _scan_cases(max_sum: int) -> list[CaseResult]:
    tubular = [w for w in enumerate_weight_types(max_sum) if euler_characteristic(w) == 0]
    return [
        make_case(
            "wpl/tubular_scan",
            {"maxSum": max_sum},
            tubular_within(max_sum),
            sorted(tubular),
        ),
        make_case(
            "wpl/euler_characteristic_examples",
            {"weights": [list(w) for w in EULER_EXAMPLES]},
            list(EULER_EXAMPLES.values()),
            [euler_characteristic(w) for w in EULER_EXAMPLES],
        ),
    ]


def _lattice_cases(weights: tuple[int, ...]) -> list[CaseResult]:
    w = WeightType(weights)
    name = ",".join(str(p) for p in weights)
    inputs = {"weights": list(weights)}
    cartan = canonical_cartan(w)
    cases = [
        make_case(f"wpl/{name}/cartan_source_sink", inputs, 2, cartan.entry(w.rank - 1, 0)),
        make_case(f"wpl/{name}/cartan_unitriangular", inputs, True, _unitriangular(cartan)),
    ]
    if euler_characteristic(w) != 0:
        return cases
    lat = tubular_lattice(w)
    delta = ordinary_point_class(lat)
    p = lat.period
    return cases + [
        make_case(f"wpl/{name}/coxeter_period", {**inputs, "p": p}, p, coxeter_period(lat)),
        make_case(f"wpl/{name}/radical_rank", inputs, lat.n - 2, radical_rank(lat)),
        make_case(f"wpl/{name}/average_antisymmetric", inputs, True, lat.average.is_antisymmetric()),
        make_case(f"wpl/{name}/rank_degree_identity", inputs, True, bilinear_identity_holds(lat)),
        make_case(
            f"wpl/{name}/radical_is_rank_degree_kernel",
            inputs,
            [],
            failures(lat.radical, lambda v: rank_degree(lat, v) != (0, 0)),
        ),
        make_case(
            f"wpl/{name}/projective_ranks",
            inputs,
            [1] * lat.n,
            [rank_degree(lat, lat.projective_class(v))[0] for v in range(lat.n)],
        ),
        make_case(
            f"wpl/{name}/ordinary_point",
            inputs,
            {"fixed": True, "chi": 0, "rank": 0, "degree": 1},
            {
                "fixed": lat.coxeter_apply(delta) == delta,
                "chi": lat.euler_form(delta, delta),
                "rank": rank_degree(lat, delta)[0],
                "degree": rank_degree(lat, delta)[1],
            },
        ),
    ]


def _unitriangular(m: ExactMatrix) -> bool:
    rows = m.rows()
    n = m.nrows
    return all(rows[i][i] == 1 for i in range(n)) and all(
        rows[i][j] == 0 for i in range(n) for j in range(i + 1, n)
    )


def _tasks(ctx: SuiteContext) -> list[Task]:
    opts = ctx.options.wpl
    tasks: list[Task] = [partial(_scan_cases, opts.max_sum)]
    tasks.extend(partial(_lattice_cases, tuple(w)) for w in opts.weights)
    return tasks


suite = Suite(
    name="wpl",
    description="Weighted projective lines: Euler characteristic, Coxeter period, average Euler form",
    tasks=_tasks,
)
