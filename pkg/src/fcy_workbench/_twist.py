"""Generalized 1-spherical twists: lattice reflections and explicit clean-case cones."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ._errors import (
    WorkbenchError,
    dimension_mismatch,
    l_sequence_invariant,
    nonvanishing_ext,
    spherical_invariant,
)
from ._linalg import ExactMatrix, integer_vector
from ._models import TwistCheckReport
from ._quiver import LatticeVector
from ._reps import Morphism, Rep, direct_sum, hom_ext_dims, hom_space, ker_coker, zero_rep
from ._wpl import TubularLattice, arm_vertices, ordinary_point_class, random_class

logger = logging.getLogger(__name__)

CHECKS = ("quasi-inverse", "isometry")
MAX_SPHERICAL_CLASSES = 6


@dataclass(frozen=True)
class SphericalData:
    """Classes e_i with chi(e_i, e_j) = delta_ij - delta_{sigma(i), j} in an ambient Euler form."""

    classes: tuple[LatticeVector, ...]
    sigma: tuple[int, ...]
    euler: ExactMatrix

    def __post_init__(self):
        classes = tuple(tuple(int(x) for x in e) for e in self.classes)
        object.__setattr__(self, "classes", classes)
        object.__setattr__(self, "sigma", tuple(self.sigma))
        if sorted(self.sigma) != list(range(len(classes))):
            raise ValueError(f"sigma {self.sigma} is not a permutation of {len(classes)} indices")
        for e in classes:
            if len(e) != self.euler.nrows:
                raise dimension_mismatch(self.euler.nrows, len(e))
        for i, e_i in enumerate(classes):
            for j, e_j in enumerate(classes):
                expected = (1 if i == j else 0) - (1 if self.sigma[i] == j else 0)
                got = self.euler.bilinear(e_i, e_j)
                if got != expected:
                    raise spherical_invariant(i, j, expected, got)

    @property
    def r(self) -> int:
        return len(self.classes)

    def chi(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        return self.euler.bilinear(x, y)


def _subtract_combination(
    x: Sequence[int], coefficients: Sequence[Fraction], classes: Sequence[LatticeVector]
) -> LatticeVector:
    out = [Fraction(v) for v in x]
    for c, e in zip(coefficients, classes):
        for k, v in enumerate(e):
            out[k] -= c * v
    return integer_vector(out)


def twist_class(data: SphericalData, x: Sequence[int]) -> LatticeVector:
    """t_E(x) = x - sum_i chi(e_i, x) e_i."""
    coefficients = [data.chi(e, x) for e in data.classes]
    return _subtract_combination(x, coefficients, data.classes)


def dual_twist_class(data: SphericalData, x: Sequence[int]) -> LatticeVector:
    """t*_E(x) = x - sum_i chi(x, e_i) e_i."""
    coefficients = [data.chi(x, e) for e in data.classes]
    return _subtract_combination(x, coefficients, data.classes)


def quasi_inverse_holds(data: SphericalData, x: Sequence[int]) -> bool:
    x = tuple(x)
    return (
        twist_class(data, dual_twist_class(data, x)) == x
        and dual_twist_class(data, twist_class(data, x)) == x
    )


def isometry_holds(data: SphericalData, x: Sequence[int], y: Sequence[int]) -> bool:
    return data.chi(twist_class(data, x), twist_class(data, y)) == data.chi(x, y)


# === Building spherical data ===


def coxeter_orbit(lat: TubularLattice, x: Sequence[int]) -> list[LatticeVector]:
    orbit = [tuple(x)]
    while len(orbit) <= lat.period:
        nxt = lat.coxeter_apply(orbit[-1])
        if nxt == orbit[0]:
            return orbit
        orbit.append(nxt)
    raise ValueError(f"Class {tuple(x)} has no finite Coxeter orbit")


def spherical_data_from_orbit(lat: TubularLattice, x: Sequence[int]) -> SphericalData:
    """e_i = Phi^i x over the orbit of x, sigma the cyclic shift."""
    return spherical_data_from_orbits(lat, [x])


def spherical_data_from_orbits(lat: TubularLattice, seeds: Sequence[Sequence[int]]) -> SphericalData:
    """Union of Coxeter orbits (one per seed, from pairwise orthogonal tubes)."""
    classes: list[LatticeVector] = []
    sigma: list[int] = []
    for seed in seeds:
        orbit = coxeter_orbit(lat, seed)
        base = len(classes)
        classes.extend(orbit)
        sigma.extend(base + (k + 1) % len(orbit) for k in range(len(orbit)))
    return SphericalData(tuple(classes), tuple(sigma), lat.euler)


def random_lattice_spherical_data(
    rng: random.Random, lat: TubularLattice, max_r: int = MAX_SPHERICAL_CLASSES
) -> SphericalData:
    """Orbits of simple tube classes from a random nonempty set of distinct tubes, at most `max_r` classes."""
    candidates: list[LatticeVector] = [ordinary_point_class(lat)]
    for arm in arm_vertices(lat.weight_type):
        v = rng.choice(arm)
        candidates.append(tuple(1 if k == v else 0 for k in range(lat.n)))
    chosen: list[LatticeVector] = []
    size = 0
    for c in candidates:
        orbit_size = len(coxeter_orbit(lat, c))
        if rng.random() < 0.5 and size + orbit_size <= max_r:
            chosen.append(c)
            size += orbit_size
    # the ordinary point has a one-element orbit
    return spherical_data_from_orbits(lat, chosen or candidates[:1])


def random_spherical_data(rng: random.Random, r: int, mixes: int | None = None) -> SphericalData:
    """Data in Z^r with Euler form I - P_sigma, moved by a random unimodular base change."""
    if r < 1:
        raise ValueError("r must be positive")
    sigma = list(range(r))
    rng.shuffle(sigma)
    gram = [[(1 if i == j else 0) - (1 if sigma[i] == j else 0) for j in range(r)] for i in range(r)]
    u = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    if r > 1:
        for _ in range(mixes if mixes is not None else 2 * r):
            i, j = rng.sample(range(r), 2)
            c = rng.choice((-2, -1, 1, 2))
            for row in u:
                row[j] += c * row[i]
    basis = ExactMatrix.from_rows(u)
    inverse = basis.inverse()
    euler = inverse.transpose() @ ExactMatrix.from_rows(gram) @ inverse
    classes = tuple(integer_vector(col) for col in basis.columns())
    return SphericalData(classes, tuple(sigma), euler)


# === Explicit twists in hereditary module categories ===


def _hconcat(blocks: Sequence[ExactMatrix], nrows: int) -> ExactMatrix:
    columns = [col for b in blocks for col in b.columns()]
    return ExactMatrix.from_columns(columns, nrows)


def _vconcat(blocks: Sequence[ExactMatrix], ncols: int) -> ExactMatrix:
    rows = [row for b in blocks for row in b.rows()]
    return ExactMatrix.from_rows(rows, ncols=ncols)


def _copies(e_reps: Sequence[Rep], x: Rep, *, into_x: bool) -> tuple[Rep, list[Morphism]]:
    """Direct sum of one copy of E_i per basis map, with the basis maps in matching order."""
    total = zero_rep(x.quiver)
    maps: list[Morphism] = []
    for e in e_reps:
        hom = hom_space(e, x) if into_x else hom_space(x, e)
        for phi in hom.basis:
            total = direct_sum(total, e)
            maps.append(phi)
    return total, maps


def evaluation_map(e_reps: Sequence[Rep], x: Rep) -> tuple[Rep, Morphism]:
    """ev: sum_i Hom(E_i, X) (x) E_i -> X."""
    source, maps = _copies(e_reps, x, into_x=True)
    blocks = tuple(
        _hconcat([phi[v] for phi in maps], x.dims[v]) for v in range(x.quiver.vertex_count)
    )
    return source, blocks


def coevaluation_map(e_reps: Sequence[Rep], x: Rep) -> tuple[Rep, Morphism]:
    """X -> sum_i Hom(X, E_i)^* (x) E_i."""
    target, maps = _copies(e_reps, x, into_x=False)
    blocks = tuple(
        _vconcat([phi[v] for phi in maps], x.dims[v]) for v in range(x.quiver.vertex_count)
    )
    return target, blocks


def twist_explicit(e_reps: Sequence[Rep], x: Rep) -> tuple[Rep, Rep]:
    """T_E X = coker(ev) + ker(ev)[1] when Ext^1(E_i, X) = 0; returns (coker, ker)."""
    for e in e_reps:
        if hom_ext_dims(e, x)[1] != 0:
            raise nonvanishing_ext()
    source, ev = evaluation_map(e_reps, x)
    ker, coker = ker_coker(ev, source, x)
    return coker, ker


def dual_twist_explicit(e_reps: Sequence[Rep], x: Rep) -> tuple[Rep, Rep]:
    """T*_E X = ker(coev) + coker(coev)[-1] when Ext^1(X, E_i) = 0; returns (ker, coker)."""
    for e in e_reps:
        if hom_ext_dims(x, e)[1] != 0:
            raise nonvanishing_ext()
    target, coev = coevaluation_map(e_reps, x)
    ker, coker = ker_coker(coev, x, target)
    return ker, coker


def explicit_class(head: Rep, tail: Rep) -> LatticeVector:
    """[head] - [tail] on dimension vectors."""
    return tuple(a - b for a, b in zip(head.dims, tail.dims))


# === L-sequences ===


@dataclass(frozen=True)
class LSequenceConfig:
    """Peripheral classes [L], [S] in a tubular lattice; [E] is the orbit sum of [S]."""

    lattice: TubularLattice
    l: LatticeVector
    s: LatticeVector

    def __post_init__(self):
        lat = self.lattice
        e = self.e
        for pair, x, y, expected in (
            ("L,L", self.l, self.l, 1),
            ("L,E", self.l, e, 1),
            ("E,L", e, self.l, -1),
            ("E,E", e, e, 0),
        ):
            got = lat.euler_form(x, y)
            if got != expected:
                raise l_sequence_invariant(pair, expected, got)

    @property
    def orbit(self) -> list[LatticeVector]:
        return coxeter_orbit(self.lattice, self.s)

    @property
    def tube_rank(self) -> int:
        return len(self.orbit)

    @property
    def e(self) -> LatticeVector:
        orbit = self.orbit
        return tuple(sum(c[k] for c in orbit) for k in range(self.lattice.n))


def l_sequence(cfg: LSequenceConfig, i_min: int, i_max: int) -> list[LatticeVector]:
    """[L_i] = [L] + i [E] for i_min <= i <= i_max."""
    e = cfg.e
    return [tuple(a + i * b for a, b in zip(cfg.l, e)) for i in range(i_min, i_max + 1)]


def l_sequence_table(cfg: LSequenceConfig, i_min: int, i_max: int) -> dict[tuple[int, int], Fraction]:
    seq = l_sequence(cfg, i_min, i_max)
    return {
        (i_min + a, i_min + b): cfg.lattice.euler_form(x, y)
        for a, x in enumerate(seq)
        for b, y in enumerate(seq)
    }


def find_l_sequence_config(lat: TubularLattice) -> LSequenceConfig:
    """L = P_source; S the first tube simple with chi(L, S) = 1 and chi(L, tau^-i S) = 0 for 0 < i < s."""
    l = lat.projective_class(0)
    delta = ordinary_point_class(lat)
    candidates: list[LatticeVector] = []
    for arm in arm_vertices(lat.weight_type):
        candidates.append(tuple(d - (1 if k in arm else 0) for k, d in enumerate(delta)))
    candidates.append(delta)
    for s in candidates:
        orbit = coxeter_orbit(lat, s)
        if lat.euler_form(l, s) != 1:
            continue
        inverse_orbit = [orbit[-i] for i in range(1, len(orbit))]
        if any(lat.euler_form(l, c) != 0 for c in inverse_orbit):
            continue
        try:
            return LSequenceConfig(lat, l, s)
        except WorkbenchError:
            continue
    raise ValueError(f"No L-sequence configuration found for weights {lat.weights}")


# === Randomized checks ===


def check_twists(
    lat: TubularLattice, check: str, seed: int, samples: int
) -> TwistCheckReport:
    """Run one randomized twist check over a tubular lattice; stops at the first counterexample."""
    if check not in CHECKS:
        raise ValueError(f"Unknown check '{check}', expected one of {', '.join(CHECKS)}")
    rng = random.Random(seed)
    data = random_lattice_spherical_data(rng, lat)
    counterexample = None
    for _ in range(samples):
        x = random_class(rng, lat.n)
        if check == "quasi-inverse":
            if not quasi_inverse_holds(data, x):
                counterexample = {"x": list(x), "classes": [list(e) for e in data.classes]}
                break
        else:
            y = random_class(rng, lat.n)
            if not isometry_holds(data, x, y):
                counterexample = {"x": list(x), "y": list(y), "classes": [list(e) for e in data.classes]}
                break
    logger.debug("Twist check %s on %s: r=%d", check, lat.weights, data.r)
    return TwistCheckReport(
        lattice=list(lat.weights),
        check=check,
        seed=seed,
        samples=samples,
        passed=counterexample is None,
        counterexample=counterexample,
    )
