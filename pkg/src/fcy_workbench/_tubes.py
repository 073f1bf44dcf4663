"""A single tube of rank r: nilpotent representations of the cyclic quiver on r vertices.

Indecomposables are uniserial and are parameterized by their socle vertex and
their length. With arrows v -> v+1, the basis vector b_k of (socle a, length l)
sits at vertex a - k and the arrow out of that vertex sends b_k to b_{k-1}
(b_0 to zero).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ._errors import rank_mismatch
from ._linalg import ExactMatrix
from ._models import TubeObjectModel
from ._quiver import cyclic_quiver
from ._reps import Rep


@dataclass(frozen=True, order=True)
class TubeObject:
    rank: int
    socle: int
    length: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"Tube rank must be >= 1, got {self.rank}")
        if not 0 <= self.socle < self.rank:
            raise ValueError(f"Socle must lie in [0, {self.rank}), got {self.socle}")
        if self.length < 1:
            raise ValueError(f"Length must be >= 1, got {self.length}")

    @property
    def top(self) -> int:
        return (self.socle - self.length + 1) % self.rank

    @property
    def is_peripheral(self) -> bool:
        return self.length == 1

    def to_model(self) -> TubeObjectModel:
        return TubeObjectModel(rank=self.rank, socle=self.socle, length=self.length)

    @classmethod
    def from_model(cls, model: TubeObjectModel) -> TubeObject:
        return cls(model.rank, model.socle, model.length)

    def __str__(self) -> str:
        return f"({self.socle},{self.length})/r{self.rank}"


def _same_rank(x: TubeObject, y: TubeObject) -> int:
    if x.rank != y.rank:
        raise rank_mismatch(x.rank, y.rank)
    return x.rank


# === Translation ===


def tau(x: TubeObject) -> TubeObject:
    """AR translate: the socle moves one step along the arrows."""
    return TubeObject(x.rank, (x.socle + 1) % x.rank, x.length)


def tau_inverse(x: TubeObject) -> TubeObject:
    return TubeObject(x.rank, (x.socle - 1) % x.rank, x.length)


def tau_power(x: TubeObject, k: int) -> TubeObject:
    return TubeObject(x.rank, (x.socle + k) % x.rank, x.length)


def tau_orbit_size(x: TubeObject) -> int:
    k = 1
    while tau_power(x, k) != x:
        k += 1
    return k


# === Hom and Ext ===


def hom_dim(x: TubeObject, y: TubeObject) -> int:
    """Count lengths t for which the length-t top quotient of x is the length-t submodule of y."""
    r = _same_rank(x, y)
    return sum(
        1
        for t in range(1, min(x.length, y.length) + 1)
        if (x.socle - x.length + t - y.socle) % r == 0
    )


def ext1_dim_closed(x: TubeObject, y: TubeObject) -> int:
    """dim Ext^1(x, y) = dim Hom(y, tau x)."""
    return hom_dim(y, tau(x))


def is_exceptional(x: TubeObject) -> bool:
    return ext1_dim_closed(x, x) == 0


# === Objects ===


def peripheral_objects(r: int) -> list[TubeObject]:
    return [TubeObject(r, a, 1) for a in range(r)]


def objects(r: int, max_length: int) -> list[TubeObject]:
    return [TubeObject(r, a, length) for length in range(1, max_length + 1) for a in range(r)]


def to_rep(x: TubeObject) -> Rep:
    """Matrix model: a string of length l with 0/1 shift blocks."""
    r = x.rank
    q = cyclic_quiver(r)
    positions: list[list[int]] = [[] for _ in range(r)]
    for k in range(x.length):
        positions[(x.socle - k) % r].append(k)
    maps = []
    for s, t in q.arrows:
        rows = [[0] * len(positions[s]) for _ in positions[t]]
        for j, k in enumerate(positions[s]):
            if k > 0:
                rows[positions[t].index(k - 1)][j] = 1
        maps.append(ExactMatrix.from_rows(rows, ncols=len(positions[s])))
    return Rep(q, tuple(len(p) for p in positions), tuple(maps))


# === Tube lemmas ===


def length_gives_homs(a: TubeObject, b: TubeObject) -> tuple[int, int]:
    """The k in [0, r) maximizing dim Hom(tau^k a, b), with that dimension."""
    r = _same_rank(a, b)
    best_k, best_d = 0, -1
    for k in range(r):
        d = hom_dim(tau_power(a, k), b)
        if d > best_d:
            best_k, best_d = k, d
    return best_k, best_d


def is_generalized_1_spherical(
    objs: Sequence[TubeObject],
) -> tuple[bool, tuple[int, ...] | None]:
    """Hom is the identity pattern, Ext^1 a permutation sigma, and tau E_i = E_sigma(i)."""
    n = len(objs)
    if n == 0:
        return False, None
    for x in objs[1:]:
        _same_rank(objs[0], x)
    for i, x in enumerate(objs):
        for j, y in enumerate(objs):
            if hom_dim(x, y) != (1 if i == j else 0):
                return False, None
    sigma: list[int] = []
    for i, x in enumerate(objs):
        row = [ext1_dim_closed(x, y) for y in objs]
        if sorted(row) != [0] * (n - 1) + [1]:
            return False, None
        sigma.append(row.index(1))
    if sorted(sigma) != list(range(n)):
        return False, None
    if any(tau(objs[i]) != objs[sigma[i]] for i in range(n)):
        return False, None
    return True, tuple(sigma)


def cy_pair(r: int) -> tuple[int, int, Fraction]:
    """tau^r = id on the tube, so S^r = [r]; the pair is kept unreduced."""
    return r, r, Fraction(r, r)
