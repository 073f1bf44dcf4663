"""Slope cuts on tubular lattices: totality, monotonicity and directional sign checks."""

from __future__ import annotations

import random
from functools import partial
from typing import Sequence

from .._errors import WorkbenchError
from .._models import CaseResult
from .._torsion import ORDER, Label, SlopeCut, classify, effective_class, parse_theta, resolve, split_sign_check
from .._wpl import INFINITY, TubularLattice, euler_characteristic, rank_degree, tubular_lattice
from ._base import Suite, SuiteContext, Task, failures, make_case


def _policy_for(theta: str) -> str:
    # at infinity the only torsion classes are the finite-length ones on the boundary
    return "torsion" if parse_theta(theta).theta == INFINITY else "undecided"


def _lattice_cases(
    weights: tuple[int, ...], thetas: Sequence[str], bracket: str, pairs: int, seed: int
) -> list[CaseResult]:
    lat = tubular_lattice(weights)
    name = ",".join(str(p) for p in weights)
    rng = random.Random(f"{seed}:{name}")
    cuts = sorted((parse_theta(t, _policy_for(t)) for t in thetas), key=lambda c: c.theta)
    irrational = parse_theta(bracket)
    sample = [effective_class(rng, lat) for _ in range(pairs)]
    inputs = {"weights": list(weights), "thetas": list(thetas), "samples": len(sample)}

    def labels(x: tuple[int, ...]) -> list[Label]:
        return [classify(cut, lat, x) for cut in cuts]

    def non_monotone(x: tuple[int, ...]) -> bool:
        ranks = [ORDER[label] for label in labels(x)]
        return any(a < b for a, b in zip(ranks, ranks[1:]))

    def irrational_label(x: tuple[int, ...]) -> Label | None:
        try:
            return classify(irrational, lat, x)
        except WorkbenchError:
            return None

    def wrong_at_infinity(x: tuple[int, ...]) -> bool:
        rk, _ = rank_degree(lat, x)
        expected = Label.BOUNDARY if rk == 0 else Label.FREE
        return classify(parse_theta("inf"), lat, x) is not expected

    cases = [
        make_case(
            f"torsion/{name}/totality",
            inputs,
            [],
            failures(sample, lambda x: any(label not in ORDER for label in labels(x))),
        ),
        make_case(f"torsion/{name}/monotone_in_theta", inputs, [], failures(sample, non_monotone)),
        make_case(
            f"torsion/{name}/irrational_has_no_boundary",
            {**inputs, "bracket": bracket},
            [],
            failures(sample, lambda x: irrational_label(x) is Label.BOUNDARY),
        ),
        make_case(f"torsion/{name}/infinity_cut", inputs, [], failures(sample, wrong_at_infinity)),
    ]
    for cut in cuts + [irrational]:
        cases.append(_directional_case(lat, name, cut, rng, pairs))
    return cases


def _directional_case(lat: TubularLattice, name: str, cut: SlopeCut, rng: random.Random, pairs: int) -> CaseResult:
    """Sampled torsion/free pairs: slope f < slope t and avg(f, t) > 0."""
    bad: list[str] = []
    checked = 0
    for _ in range(pairs):
        x, y = effective_class(rng, lat), effective_class(rng, lat)
        try:
            lx = resolve(classify(cut, lat, x), cut.policy)
            ly = resolve(classify(cut, lat, y), cut.policy)
        except WorkbenchError:
            continue
        if {lx, ly} != {Label.TORSION, Label.FREE}:
            continue
        t, f = (x, y) if lx is Label.TORSION else (y, x)
        checked += 1
        report = split_sign_check(cut, lat, t, f)
        if not report.passed and len(bad) < 10:
            bad.append(f"t={t} f={f} slopes {report.slope_t}/{report.slope_f}")
    return make_case(
        f"torsion/{name}/directional[{cut}]",
        {"weights": list(lat.weights), "theta": str(cut), "pairs": pairs, "checked": checked},
        [],
        bad,
    )


def _tasks(ctx: SuiteContext) -> list[Task]:
    opts = ctx.options.torsion
    return [
        partial(_lattice_cases, tuple(w), opts.thetas, opts.bracket, opts.pairs, ctx.seed)
        for w in ctx.options.wpl.weights
        if euler_characteristic(w) == 0
    ]


suite = Suite(
    name="torsion",
    description="Split torsion pairs from slope cuts on tubular lattices",
    tasks=_tasks,
)
