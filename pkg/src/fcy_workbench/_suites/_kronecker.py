"""The Kronecker quiver: preprojectives, regular modules R_f, and wildness of K_n."""

from __future__ import annotations

import random
from functools import partial

from .._models import CaseResult
from .._quiver import euler_form, kronecker_quiver
from .._reps import (
    KroneckerFamily,
    euler_check,
    hom_ext_dims,
    is_exceptional,
    is_intertwiner,
    ker_coker,
    kronecker_objects,
    rank_profile,
    representation_type,
    wild_witness,
)
from ._base import Suite, SuiteContext, Task, failures, make_case

Parameter = tuple[int, int]


def parameter_pairs(rng: random.Random, count: int) -> list[Parameter]:
    """Pairwise non-proportional nonzero (lambda, mu) with small integer entries."""
    chosen: list[Parameter] = []
    while len(chosen) < count:
        f = (rng.randint(-4, 4), rng.randint(-4, 4))
        if f == (0, 0):
            continue
        if any(f[0] * g[1] == f[1] * g[0] for g in chosen):
            continue
        chosen.append(f)
    return chosen


def _label(f: Parameter) -> str:
    return f"({f[0]}:{f[1]})"


def _parameter_cases(family: KroneckerFamily, f: Parameter) -> list[CaseResult]:
    r_f = family.regular(f)
    mono = family.monomorphism(f)
    ker, coker = ker_coker(mono, family.p_y, family.p_x)
    inputs = {"f": list(f)}
    return [
        make_case(
            f"kronecker/R{_label(f)}/monomorphism",
            inputs,
            [True, [0, 1]],
            [is_intertwiner(mono, family.p_y, family.p_x), rank_profile(mono)],
        ),
        make_case(
            f"kronecker/R{_label(f)}/cokernel",
            inputs,
            {"ker": [0, 0], "coker": [1, 1], "homToR": 1, "homFromR": 1},
            {
                "ker": ker.dims,
                "coker": coker.dims,
                "homToR": hom_ext_dims(coker, r_f)[0],
                "homFromR": hom_ext_dims(r_f, coker)[0],
            },
        ),
        make_case(
            f"kronecker/R{_label(f)}/projection",
            inputs,
            True,
            is_intertwiner(family.projection(f), family.p_x, r_f),
        ),
        make_case(
            f"kronecker/R{_label(f)}/homs_from_projectives",
            inputs,
            [1, 1],
            [hom_ext_dims(family.p_x, r_f)[0], hom_ext_dims(family.p_y, r_f)[0]],
        ),
        make_case(f"kronecker/R{_label(f)}/self_ext", inputs, [1, 1], hom_ext_dims(r_f, r_f)),
    ]


def _orthogonality_cases(family: KroneckerFamily, params: list[Parameter]) -> list[CaseResult]:
    regulars = {f: family.regular(f) for f in params}
    ordered = [(f, g) for f in params for g in params if f != g]
    return [
        make_case(
            "kronecker/regular_orthogonality",
            {"parameters": [list(f) for f in params]},
            [],
            failures(
                ordered,
                lambda fg: hom_ext_dims(regulars[fg[0]], regulars[fg[1]]) != (0, 0),
                lambda fg: f"{_label(fg[0])}->{_label(fg[1])}",
            ),
        )
    ]


def _structure_cases(family: KroneckerFamily, max_n: int) -> list[CaseResult]:
    modules = [family.preprojective(n) for n in range(max_n + 1)]
    modules += [family.preinjective(n) for n in range(max_n + 1)]
    pairs = [(m, n) for m in modules for n in modules]
    k3 = kronecker_quiver(3)
    witness = wild_witness(3)
    return [
        make_case("kronecker/hom_py_px", {}, 2, hom_ext_dims(family.p_y, family.p_x)[0]),
        make_case(
            "kronecker/euler_form_on_modules",
            {"modules": len(modules)},
            [],
            failures(pairs, lambda p: not euler_check(*p), lambda p: f"{p[0].dims}->{p[1].dims}"),
        ),
        make_case(
            "kronecker/preprojective_preinjective_exceptional",
            {"modules": len(modules)},
            [],
            failures(modules, lambda m: not is_exceptional(m), lambda m: str(m.dims)),
        ),
        make_case(
            "kronecker/representation_types",
            {"n": [1, 2, 3, 4]},
            ["finite", "tame", "wild", "wild"],
            [representation_type(n) for n in (1, 2, 3, 4)],
        ),
        make_case("kronecker/K3/wild_sign", {"dims": [1, 2]}, -1, euler_form(k3, (1, 2), (1, 2))),
        make_case("kronecker/K3/witness_brick", {"dims": [1, 2]}, [1, 2], hom_ext_dims(witness, witness)),
    ]


def _tasks(ctx: SuiteContext) -> list[Task]:
    opts = ctx.options.kronecker
    family, _ = kronecker_objects()
    params = parameter_pairs(random.Random(ctx.seed), opts.pairs)
    tasks: list[Task] = [partial(_parameter_cases, family, f) for f in params]
    tasks.append(partial(_orthogonality_cases, family, params))
    tasks.append(partial(_structure_cases, family, opts.max_preprojective))
    return tasks


suite = Suite(
    name="kronecker",
    description="Kronecker modules and the representation type of K_n",
    tasks=_tasks,
)
