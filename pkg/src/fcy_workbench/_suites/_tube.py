"""Tube of rank r: periodicity, Serre duality and the closed forms against the linear solver."""

from __future__ import annotations

from functools import partial

from .._models import CaseResult
from .._reps import hom_ext_dims, is_nilpotent
from .._tubes import (
    TubeObject,
    cy_pair,
    ext1_dim_closed,
    hom_dim,
    is_exceptional,
    is_generalized_1_spherical,
    length_gives_homs,
    objects,
    peripheral_objects,
    tau,
    tau_orbit_size,
    tau_power,
    to_rep,
)
from ._base import Suite, SuiteContext, Task, failures, make_case


def _pair_label(pair: tuple[TubeObject, TubeObject]) -> str:
    return f"{pair[0]}->{pair[1]}"


def _rank_cases(r: int, max_length: int) -> list[CaseResult]:
    objs = objects(r, max_length)
    reps = {x: to_rep(x) for x in objs}
    table = {(x, y): hom_ext_dims(reps[x], reps[y]) for x in objs for y in objs}
    pairs = list(table)
    inputs = {"rank": r, "maxLength": max_length, "objects": len(objs)}
    n, m, fraction = cy_pair(r)
    spherical, sigma = is_generalized_1_spherical(peripheral_objects(r))

    def lemma_fails(pair: tuple[TubeObject, TubeObject]) -> bool:
        a, b = pair
        _, d = length_gives_homs(a, b)
        return d * r < min(a.length, b.length)

    return [
        make_case(
            f"tube/r{r}/tau_period",
            inputs,
            [],
            failures(objs, lambda x: tau_power(x, r) != x),
        ),
        make_case(
            f"tube/r{r}/peripheral_orbit",
            inputs,
            [r],
            sorted({tau_orbit_size(x) for x in peripheral_objects(r)}),
        ),
        make_case(
            f"tube/r{r}/nilpotent",
            inputs,
            [],
            failures(objs, lambda x: not is_nilpotent(reps[x])),
        ),
        make_case(
            f"tube/r{r}/hom_closed_form",
            inputs,
            [],
            failures(pairs, lambda p: hom_dim(*p) != table[p][0], _pair_label),
        ),
        make_case(
            f"tube/r{r}/ext_closed_form",
            inputs,
            [],
            failures(pairs, lambda p: ext1_dim_closed(*p) != table[p][1], _pair_label),
        ),
        make_case(
            f"tube/r{r}/serre_duality",
            inputs,
            [],
            failures(pairs, lambda p: table[(p[1], tau(p[0]))][1] != hom_dim(*p), _pair_label),
        ),
        make_case(
            f"tube/r{r}/length_gives_homs",
            inputs,
            [],
            failures(pairs, lemma_fails, _pair_label),
        ),
        make_case(
            f"tube/r{r}/exceptional",
            inputs,
            [],
            failures(objs, lambda x: is_exceptional(x) != (table[(x, x)] == (1, 0))),
        ),
        make_case(f"tube/r{r}/cy_pair", {"rank": r}, [r, r], [n, m]),
        make_case(f"tube/r{r}/cy_fraction_in_unit_interval", {"rank": r}, True, 0 <= fraction <= 1),
        make_case(
            f"tube/r{r}/simples_spherical",
            {"rank": r},
            [True, [(i + 1) % r for i in range(r)]],
            [spherical, sigma],
        ),
    ]


def _tasks(ctx: SuiteContext) -> list[Task]:
    opts = ctx.options.tube
    return [partial(_rank_cases, r, opts.max_length) for r in opts.ranks]


suite = Suite(
    name="tube",
    description="Nilpotent representations of the cyclic quiver: tau, Hom, Ext and tube lemmas",
    tasks=_tasks,
)
