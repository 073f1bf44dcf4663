"""Slope cuts on tubular lattices and the split torsion pairs they induce."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ._errors import bracket_too_wide, misclassified
from ._linalg import fraction_str
from ._models import SplitSignReport, TorsionQuery
from ._wpl import INFINITY, Slope, TubularLattice, random_class, rank_degree, slope, slope_str


class Label(str, enum.Enum):
    TORSION = "T"
    FREE = "F"
    BOUNDARY = "Boundary"


ORDER = {Label.FREE: 0, Label.BOUNDARY: 1, Label.TORSION: 2}

POLICIES = ("torsion", "free", "undecided")


@dataclass(frozen=True)
class SlopeCut:
    """theta is a rational, infinity, or an irrational held by a rational bracket (lo, hi)."""

    theta: Slope | None = None
    bracket: tuple[Fraction, Fraction] | None = None
    policy: str = "undecided"

    def __post_init__(self):
        if (self.theta is None) == (self.bracket is None):
            raise ValueError("Give exactly one of theta or bracket")
        if self.bracket is not None:
            lo, hi = self.bracket
            if not lo < hi:
                raise ValueError(f"Empty bracket ({lo}, {hi})")
        if self.policy not in POLICIES:
            raise ValueError(f"Unknown boundary policy '{self.policy}'")

    @property
    def is_irrational(self) -> bool:
        return self.bracket is not None

    def __str__(self) -> str:
        if self.bracket is not None:
            lo, hi = self.bracket
            return f"{fraction_str(lo)}:{fraction_str(hi)}"
        assert self.theta is not None
        return slope_str(self.theta)


def parse_theta(text: str, policy: str = "undecided") -> SlopeCut:
    """'1/2', 'inf' or 'lo:hi'."""
    text = text.strip()
    if text.lower() in ("inf", "infinity", "oo"):
        return SlopeCut(theta=INFINITY, policy=policy)
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            return SlopeCut(bracket=(Fraction(lo), Fraction(hi)), policy=policy)
        return SlopeCut(theta=Fraction(text), policy=policy)
    except ZeroDivisionError as e:
        raise ValueError(f"Cannot parse theta '{text}'") from e


def compare(mu: Slope, cut: SlopeCut) -> Label:
    """Strictly above the cut is torsion, strictly below is free."""
    if cut.bracket is not None:
        lo, hi = cut.bracket
        if lo < mu < hi:
            raise bracket_too_wide(slope_str(mu), fraction_str(lo), fraction_str(hi))
        return Label.FREE if mu <= lo else Label.TORSION
    if mu == cut.theta:
        return Label.BOUNDARY
    assert cut.theta is not None
    return Label.TORSION if mu > cut.theta else Label.FREE


def classify(cut: SlopeCut, lat: TubularLattice, x: Sequence[int]) -> Label:
    return compare(slope(lat, x), cut)


def resolve(label: Label, policy: str) -> Label:
    """Send boundary classes to a side according to the policy token."""
    if label is not Label.BOUNDARY or policy == "undecided":
        return label
    return Label.TORSION if policy == "torsion" else Label.FREE


def split_sign_check(cut: SlopeCut, lat: TubularLattice, t: Sequence[int], f: Sequence[int]) -> SplitSignReport:
    """Slope f < slope t, and avg(f, t) > 0: morphisms only flow from F up to T."""
    for name, x in (("t", t), ("f", f)):
        rk, deg = rank_degree(lat, x)
        if rk < 0 or (rk == 0 and deg <= 0):
            raise misclassified(f"{name} = {tuple(x)} is not an effective class")
    if resolve(classify(cut, lat, t), cut.policy) is not Label.TORSION:
        raise misclassified(f"t = {tuple(t)} is not torsion for theta {cut}")
    if resolve(classify(cut, lat, f), cut.policy) is not Label.FREE:
        raise misclassified(f"f = {tuple(f)} is not torsion-free for theta {cut}")
    mu_t, mu_f = slope(lat, t), slope(lat, f)
    chi_ft = lat.average_form(f, t)
    return SplitSignReport(
        slope_t=slope_str(mu_t),
        slope_f=slope_str(mu_f),
        chi_bar_ft=fraction_str(chi_ft),
        passed=mu_f < mu_t and chi_ft > 0,
    )


def effective_class(rng: random.Random, lat: TubularLattice, bound: int = 5) -> tuple[int, ...]:
    """A random class with rk > 0, or rk = 0 and deg > 0."""
    while True:
        x = random_class(rng, lat.n, bound)
        rk, deg = rank_degree(lat, x)
        if rk == 0 and deg == 0:
            continue
        if rk < 0 or (rk == 0 and deg < 0):
            x = tuple(-v for v in x)
        return x


def query(lat: TubularLattice, cut: SlopeCut, x: Sequence[int]) -> TorsionQuery:
    rk, deg = rank_degree(lat, x)
    mu = slope(lat, x)
    label = resolve(compare(mu, cut), cut.policy)
    return TorsionQuery(
        weights=list(lat.weights),
        theta=str(cut),
        vector=list(x),
        rank=rk,
        degree=fraction_str(deg),
        slope=slope_str(mu),
        label=label.value,
    )
