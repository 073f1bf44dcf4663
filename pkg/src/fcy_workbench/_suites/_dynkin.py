"""Fractional Calabi-Yau dimensions of Dynkin quivers."""

from __future__ import annotations

from fractions import Fraction
from functools import partial

from .._dynkin import (
    DynkinQuiver,
    all_orientations,
    coxeter_number,
    cy_dimension,
    dynkin_quiver,
    objects,
    parse_diagram,
    serre_power_is_shift,
    shift_by,
    tau_derived,
    tau_inverse_derived,
    tau_power,
)
from .._models import CaseResult
from .._quiver import euler_form
from ._base import Suite, SuiteContext, Task, failures, make_case

E_COXETER = {6: 12, 7: 18, 8: 30}
E_ROOTS = {6: 36, 7: 63, 8: 120}


def known_coxeter_number(kind: str, n: int) -> int:
    if kind == "A":
        return n + 1
    if kind == "D":
        return 2 * n - 2
    return E_COXETER[n]


def known_root_count(kind: str, n: int) -> int:
    if kind == "A":
        return n * (n + 1) // 2
    if kind == "D":
        return n * (n - 1)
    return E_ROOTS[n]


def longest_element_is_minus_one(kind: str, n: int) -> bool:
    return (kind == "A" and n == 1) or (kind == "D" and n % 2 == 0) or (kind == "E" and n in (7, 8))


def expected_minimal_pair(kind: str, n: int) -> tuple[int, int]:
    """S^(h/2) is already a shift when w_0 = -1; otherwise the first shift is S^h = [h-2]."""
    h = known_coxeter_number(kind, n)
    if longest_element_is_minus_one(kind, n):
        return h // 2, h // 2 - 1
    return h, h - 2


def _diagram_cases(name: str) -> list[CaseResult]:
    kind, n = parse_diagram(name)
    dq = dynkin_quiver(kind, n)
    h = known_coxeter_number(kind, n)
    inputs = {"diagram": dq.name}
    start = objects(dq)
    pair = cy_dimension(dq)
    fraction = Fraction(pair[1], pair[0])
    return [
        make_case(f"dynkin/{dq.name}/coxeter_order", inputs, h, coxeter_number(dq)),
        make_case(f"dynkin/{dq.name}/root_count", inputs, known_root_count(kind, n), len(dq.roots)),
        make_case(
            f"dynkin/{dq.name}/roots_tits",
            inputs,
            [1],
            sorted({euler_form(dq.quiver, d, d) for d in dq.roots}),
        ),
        make_case(
            f"dynkin/{dq.name}/tau_round_trip",
            inputs,
            [],
            failures(start, lambda x: tau_inverse_derived(tau_derived(x, dq), dq) != x),
        ),
        make_case(
            f"dynkin/{dq.name}/tau_h_is_shift_minus_2",
            inputs,
            [],
            failures(start, lambda x: tau_power(x, dq, h) != shift_by(x, -2)),
        ),
        make_case(f"dynkin/{dq.name}/serre_h_shift", {**inputs, "n": h}, h - 2, serre_power_is_shift(dq, h)),
        make_case(f"dynkin/{dq.name}/minimal_pair", inputs, expected_minimal_pair(kind, n), pair),
        make_case(f"dynkin/{dq.name}/fraction_below_one", inputs, True, 0 <= fraction < 1),
    ]


def _orientation_cases(name: str) -> list[CaseResult]:
    kind, n = parse_diagram(name)
    quivers: list[DynkinQuiver] = all_orientations(kind, n)
    pairs = sorted({cy_dimension(dq) for dq in quivers})
    return [
        make_case(
            f"dynkin/{kind}{n}/orientation_independence",
            {"diagram": f"{kind}{n}", "orientations": len(quivers)},
            [expected_minimal_pair(kind, n)],
            pairs,
        )
    ]


def _tasks(ctx: SuiteContext) -> list[Task]:
    opts = ctx.options.dynkin
    tasks: list[Task] = [partial(_diagram_cases, name) for name in opts.diagrams]
    tasks.extend(partial(_orientation_cases, name) for name in opts.orientation_check)
    return tasks


suite = Suite(
    name="dynkin",
    description="Serre functor periodicity on D^b(rep Q) for Dynkin quivers",
    tasks=_tasks,
)
