"""Weighted projective lines through canonical algebras: K-theoretic numerics.

Vertex numbering of the canonical algebra of weight type (p_1, ..., p_t):
0 is the source, arm i contributes p_i - 1 interior vertices in path order,
and n - 1 is the sink.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ._errors import invalid_weights, non_tubular, undefined_slope
from ._linalg import ExactMatrix, Scalar, fraction_str, integer_vector
from ._models import WplSummary
from ._quiver import LatticeVector, coxeter_matrix, euler_matrix, matrix_order

logger = logging.getLogger(__name__)

Slope = Fraction | float
INFINITY = math.inf

TUBULAR_TYPES: tuple[tuple[int, ...], ...] = ((2, 2, 2, 2), (3, 3, 3), (2, 4, 4), (2, 3, 6))


@dataclass(frozen=True)
class WeightType:
    """Weights p_1..p_t (each >= 2) with pairwise distinct nonzero lambda_3..lambda_t."""

    weights: tuple[int, ...]
    lambdas: tuple[Fraction, ...] = field(default=())

    def __post_init__(self):
        weights = tuple(int(p) for p in self.weights)
        object.__setattr__(self, "weights", weights)
        if not weights:
            raise invalid_weights("Weight type must be nonempty")
        if any(p < 2 for p in weights):
            raise invalid_weights(f"Weights must be >= 2, got {list(weights)}")
        lambdas = tuple(Fraction(x) for x in self.lambdas)
        if not lambdas and len(weights) > 2:
            lambdas = tuple(Fraction(i) for i in range(2, len(weights)))
        object.__setattr__(self, "lambdas", lambdas)
        if len(weights) >= 2 and len(lambdas) != len(weights) - 2:
            raise invalid_weights(f"Need {len(weights) - 2} lambdas, got {len(lambdas)}")
        if len(set(lambdas)) != len(lambdas) or any(x == 0 for x in lambdas):
            raise invalid_weights("Lambdas must be pairwise distinct and nonzero")

    @property
    def rank(self) -> int:
        """K_0 rank n = 2 + sum(p_i - 1)."""
        return 2 + sum(p - 1 for p in self.weights)

    @property
    def period(self) -> int:
        return math.lcm(*self.weights)


def parse_weights(text: str) -> WeightType:
    """'2,3,6' -> WeightType((2, 3, 6))."""
    try:
        weights = tuple(int(part) for part in text.split(","))
    except ValueError as e:
        raise invalid_weights(f"Cannot parse weights '{text}'") from e
    return WeightType(weights)


def euler_characteristic(w: WeightType | Sequence[int]) -> Fraction:
    """chi_H = 2 - sum(1 - 1/p_i)."""
    weights = w.weights if isinstance(w, WeightType) else tuple(w)
    return 2 - sum((1 - Fraction(1, p) for p in weights), Fraction(0))


def weight_class(w: WeightType | Sequence[int]) -> str:
    chi = euler_characteristic(w)
    if chi > 0:
        return "domestic"
    if chi == 0:
        return "tubular"
    return "wild"


def enumerate_weight_types(max_sum: int) -> list[tuple[int, ...]]:
    """Nondecreasing tuples of entries >= 2 with entry sum <= max_sum."""
    found: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], remaining: int) -> None:
        low = prefix[-1] if prefix else 2
        for p in range(low, remaining + 1):
            weights = prefix + (p,)
            found.append(weights)
            extend(weights, remaining - p)

    extend((), max_sum)
    return sorted(found, key=lambda ws: (len(ws), ws))


# === Canonical algebra ===


def arm_vertices(w: WeightType) -> list[list[int]]:
    """Interior vertices of each arm, in path order from source to sink."""
    arms = []
    next_vertex = 1
    for p in w.weights:
        arms.append(list(range(next_vertex, next_vertex + p - 1)))
        next_vertex += p - 1
    return arms


def canonical_cartan(w: WeightType) -> ExactMatrix:
    """C[v][u] = dim of the path space u -> v modulo the canonical relations.

    Paths inside one arm are unique; all full-arm paths from source to sink
    span a 2-dimensional space for any valid lambdas.
    """
    if len(w.weights) < 2:
        raise invalid_weights("Canonical algebras need at least two arms")
    n = w.rank
    source, sink = 0, n - 1
    rows = [[0] * n for _ in range(n)]
    for v in range(n):
        rows[v][v] = 1
    for arm in arm_vertices(w):
        chain = [source] + arm + [sink]
        for i, u in enumerate(chain):
            for v in chain[i + 1 :]:
                rows[v][u] = 1
    rows[sink][source] = 2
    return ExactMatrix.from_rows(rows)


# === Tubular lattice ===


@dataclass(frozen=True)
class TubularLattice:
    """K_0 of a tubular weighted projective line with its forms."""

    weight_type: WeightType
    cartan: ExactMatrix
    euler: ExactMatrix
    coxeter: ExactMatrix
    period: int
    average: ExactMatrix
    radical: tuple[LatticeVector, ...]
    rank_functional: tuple[Fraction, ...]
    degree_functional: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return self.cartan.nrows

    @property
    def weights(self) -> tuple[int, ...]:
        return self.weight_type.weights

    def euler_form(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Fraction:
        return self.euler.bilinear(x, y)

    def average_form(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Fraction:
        return self.average.bilinear(x, y)

    def projective_class(self, v: int) -> LatticeVector:
        return integer_vector(self.cartan.column(v))

    def coxeter_apply(self, x: Sequence[int], k: int = 1) -> LatticeVector:
        return integer_vector((self.coxeter**k).apply(x))


def _average_matrix(euler: ExactMatrix, coxeter: ExactMatrix, p: int) -> ExactMatrix:
    """(1/p) sum_j (Phi^j)^T E, the Gram matrix of the average Euler form."""
    n = euler.nrows
    total = ExactMatrix.zeros(n, n)
    power = ExactMatrix.identity(n)
    for _ in range(p):
        total = total + power.transpose() @ euler
        power = coxeter @ power
    return total.scale(Fraction(1, p))


def _integral(v: Sequence[Fraction]) -> LatticeVector:
    scale = math.lcm(*(x.denominator for x in v)) if v else 1
    scaled = [int(x * scale) for x in v]
    g = math.gcd(*scaled) or 1
    return tuple(x // g for x in scaled)


def radical_basis(average: ExactMatrix) -> tuple[LatticeVector, ...]:
    """Primitive integral vectors spanning rad of the average form."""
    return tuple(_integral(v) for v in average.nullspace())


def tubular_lattice(w: WeightType | Sequence[int]) -> TubularLattice:
    wt = w if isinstance(w, WeightType) else WeightType(tuple(w))
    if euler_characteristic(wt) != 0:
        raise non_tubular(wt.weights)
    cartan = canonical_cartan(wt)
    euler = euler_matrix(cartan)
    coxeter = coxeter_matrix(cartan)
    p = wt.period
    average = _average_matrix(euler, coxeter, p)
    n = cartan.nrows
    # rk X = avg(X, E) for E the homogeneous simple, deg X = avg(L, X) - avg(L, L) rk X
    # with L the projective at the source
    delta = (1,) * n
    source = integer_vector(cartan.column(0))
    rank_functional = average.apply(delta)
    l_row = average.transpose().apply(source)
    l_self = average.bilinear(source, source)
    degree_functional = tuple(a - l_self * b for a, b in zip(l_row, rank_functional))
    logger.debug("Built tubular lattice for weights %s (n=%d, p=%d)", wt.weights, n, p)
    return TubularLattice(
        weight_type=wt,
        cartan=cartan,
        euler=euler,
        coxeter=coxeter,
        period=p,
        average=average,
        radical=radical_basis(average),
        rank_functional=tuple(rank_functional),
        degree_functional=degree_functional,
    )


def ordinary_point_class(lat: TubularLattice) -> LatticeVector:
    """delta: the class of a simple in a homogeneous tube."""
    return (1,) * lat.n


def radical_rank(lat: TubularLattice) -> int:
    return len(lat.radical)


def coxeter_period(lat: TubularLattice) -> int | None:
    return matrix_order(lat.coxeter, lat.period)


# === Rank, degree, slope ===


def rank_degree(lat: TubularLattice, x: Sequence[Scalar]) -> tuple[int, Fraction]:
    rk = sum((Fraction(a) * b for a, b in zip(x, lat.rank_functional)), Fraction(0))
    deg = sum((Fraction(a) * b for a, b in zip(x, lat.degree_functional)), Fraction(0))
    if rk.denominator != 1:
        raise ValueError(f"Rank {rk} of {tuple(x)} is not integral")
    return int(rk), deg


def slope(lat: TubularLattice, x: Sequence[Scalar]) -> Slope:
    """deg/rk, or infinity for rank 0."""
    rk, deg = rank_degree(lat, x)
    if rk == 0:
        if deg == 0:
            raise undefined_slope()
        return INFINITY
    return deg / rk


def slope_str(mu: Slope) -> str:
    return "inf" if mu == INFINITY else fraction_str(Fraction(mu))


def hom_direction_check(lat: TubularLattice, x: Sequence[Scalar], y: Sequence[Scalar]) -> Fraction:
    """The signed value avg(x, y); positive when slope x < slope y for positive ranks."""
    return lat.average_form(x, y)


def bilinear_identity_holds(lat: TubularLattice) -> bool:
    """avg(e_a, e_b) = rk e_a deg e_b - deg e_a rk e_b on every pair of basis vectors."""
    rk, deg = lat.rank_functional, lat.degree_functional
    rows = lat.average.rows()
    return all(
        rows[a][b] == rk[a] * deg[b] - deg[a] * rk[b] for a in range(lat.n) for b in range(lat.n)
    )


def random_class(rng: random.Random, n: int, bound: int = 5) -> LatticeVector:
    return tuple(rng.randint(-bound, bound) for _ in range(n))


def summarize(w: WeightType) -> WplSummary:
    """Numerical summary; lattice data only for tubular types."""
    chi = euler_characteristic(w)
    summary = WplSummary(weights=list(w.weights), chi=fraction_str(chi), n=w.rank)
    if chi != 0:
        return summary
    lat = tubular_lattice(w)
    summary.p = lat.period
    summary.coxeter_order = coxeter_period(lat)
    summary.radical_rank = radical_rank(lat)
    summary.identity_check = bilinear_identity_holds(lat) and lat.average.is_antisymmetric()
    return summary
