"""Twist functors: quasi-inverse and isometry on lattices, explicit clean cases, L-sequences."""

from __future__ import annotations

import random
from functools import partial

from .._errors import WorkbenchError
from .._models import CaseResult
from .._quiver import cartan_matrix, euler_matrix, kronecker_quiver
from .._reps import Rep, hom_ext_dims, kronecker_objects
from .._tubes import TubeObject, peripheral_objects, to_rep
from .._twist import (
    SphericalData,
    check_twists,
    dual_twist_class,
    dual_twist_explicit,
    explicit_class,
    find_l_sequence_config,
    isometry_holds,
    l_sequence_table,
    quasi_inverse_holds,
    random_spherical_data,
    twist_class,
    twist_explicit,
)
from .._wpl import euler_characteristic, random_class, tubular_lattice
from ._base import Suite, SuiteContext, Task, failures, make_case


def _lattice_cases(weights: tuple[int, ...], seed: int, samples: int, l_range: int) -> list[CaseResult]:
    lat = tubular_lattice(weights)
    name = ",".join(str(p) for p in weights)
    inputs = {"weights": list(weights), "seed": seed, "samples": samples}
    cfg = find_l_sequence_config(lat)
    table = l_sequence_table(cfg, -l_range, l_range)
    return [
        make_case(
            f"twist/{name}/quasi_inverse",
            inputs,
            True,
            check_twists(lat, "quasi-inverse", seed, samples).passed,
        ),
        make_case(
            f"twist/{name}/isometry",
            inputs,
            True,
            check_twists(lat, "isometry", seed, samples).passed,
        ),
        make_case(
            f"twist/{name}/l_sequence",
            {"weights": list(weights), "range": [-l_range, l_range], "tubeRank": cfg.tube_rank},
            [],
            failures(
                sorted(table),
                lambda ij: table[ij] != 1 + (ij[1] - ij[0]),
                lambda ij: f"chi(L{ij[0]},L{ij[1]})={table[ij]}",
            ),
        ),
    ]


def _abstract_cases(r: int, seed: int, samples: int) -> list[CaseResult]:
    rng = random.Random(seed * 1009 + r)
    data = random_spherical_data(rng, r)
    xs = [random_class(rng, r) for _ in range(samples)]
    ys = [random_class(rng, r) for _ in range(samples)]
    inputs = {"r": r, "sigma": list(data.sigma), "seed": seed, "samples": samples}
    return [
        make_case(
            f"twist/abstract/r{r}/quasi_inverse",
            inputs,
            [],
            failures(xs, lambda x: not quasi_inverse_holds(data, x)),
        ),
        make_case(
            f"twist/abstract/r{r}/isometry",
            inputs,
            [],
            failures(range(samples), lambda k: not isometry_holds(data, xs[k], ys[k])),
        ),
    ]


def kronecker_spherical_data(r_f: Rep) -> SphericalData:
    """The class of R_f as one-element spherical data in K_0 of the Kronecker algebra."""
    euler = euler_matrix(cartan_matrix(kronecker_quiver(2)))
    return SphericalData((r_f.dims,), (0,), euler)


def _explicit_cases() -> list[CaseResult]:
    family, r_f = kronecker_objects((1, 0))
    data = kronecker_spherical_data(r_f)
    ker, coker = dual_twist_explicit([r_f], family.p_y)

    candidates = [family.preprojective(n) for n in range(4)]
    candidates += [family.preinjective(n) for n in range(4)]
    candidates.append(family.regular((0, 1)))

    def twist_mismatch(x: Rep) -> bool:
        if hom_ext_dims(r_f, x)[1] != 0:
            return False
        head, tail = twist_explicit([r_f], x)
        return explicit_class(head, tail) != twist_class(data, x.dims)

    def dual_mismatch(x: Rep) -> bool:
        if hom_ext_dims(x, r_f)[1] != 0:
            return False
        head, tail = dual_twist_explicit([r_f], x)
        return explicit_class(head, tail) != dual_twist_class(data, x.dims)

    orthogonal = family.regular((0, 1))
    orth_coker, orth_ker = twist_explicit([r_f], orthogonal)

    tube_simples = [to_rep(x) for x in peripheral_objects(2)]
    try:
        twist_explicit(tube_simples, to_rep(TubeObject(2, 0, 2)))
        error_type = None
    except WorkbenchError as e:
        error_type = e.error_type

    def label(x: Rep) -> str:
        return str(x.dims)

    return [
        make_case(
            "twist/kronecker/dual_twist_of_P_y",
            {"E": "R(1:0)", "X": "P_y"},
            {"ker": [0, 0], "coker": [1, 0]},
            {"ker": ker.dims, "coker": coker.dims},
        ),
        make_case(
            "twist/kronecker/twist_class_coherence",
            {"modules": len(candidates)},
            [],
            failures(candidates, twist_mismatch, label),
        ),
        make_case(
            "twist/kronecker/dual_twist_class_coherence",
            {"modules": len(candidates)},
            [],
            failures(candidates, dual_mismatch, label),
        ),
        make_case(
            "twist/kronecker/orthogonal_fixed",
            {"E": "R(1:0)", "X": "R(0:1)"},
            {"coker": [1, 1], "ker": [0, 0]},
            {"coker": orth_coker.dims, "ker": orth_ker.dims},
        ),
        make_case(
            "twist/tube/nonvanishing_ext_rejected",
            {"rank": 2, "E": "both simples", "X": [0, 2]},
            "NonvanishingExt",
            error_type,
        ),
    ]


def _tasks(ctx: SuiteContext) -> list[Task]:
    opts = ctx.options.twist
    tasks: list[Task] = []
    for w in ctx.options.wpl.weights:
        if euler_characteristic(w) == 0:
            tasks.append(partial(_lattice_cases, tuple(w), ctx.seed, ctx.samples, opts.l_range))
    tasks.extend(partial(_abstract_cases, r, ctx.seed, ctx.samples) for r in range(1, opts.max_r + 1))
    tasks.append(_explicit_cases)
    return tasks


suite = Suite(
    name="twist",
    description="Generalized 1-spherical twists on K-theory and in module categories",
    tasks=_tasks,
)
