"""Combinatorial model of D^b(rep Q) for a Dynkin quiver Q.

Indecomposable objects are pairs (positive root, shift). The translate tau acts
through the Coxeter matrix, leaving the heart when the image turns negative.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from ._errors import bound_exceeded, invalid_quiver
from ._linalg import ExactMatrix
from ._models import CyRow
from ._quiver import (
    LatticeVector,
    Quiver,
    apply_integral,
    cartan_matrix,
    coxeter_matrix,
    matrix_order,
    simple_classes,
    tits_form,
)

logger = logging.getLogger(__name__)

ROOT_COORDINATE_BOUND = 6

DEFAULT_TABLE = ("A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6", "E7", "E8")


def diagram_edges(kind: str, n: int) -> list[tuple[int, int]]:
    """Edges of the Dynkin diagram; the branch vertex of D and E sits on a chain."""
    if kind == "A" and n >= 1:
        return [(i, i + 1) for i in range(n - 1)]
    if kind == "D" and n >= 4:
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if kind == "E" and n in (6, 7, 8):
        return [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]
    raise invalid_quiver(f"No Dynkin diagram {kind}_{n}")


def _arm_lengths(q: Quiver) -> tuple[int, ...] | None:
    """Sorted arm lengths around the unique branch vertex, () for a path, None otherwise."""
    neighbours: list[set[int]] = [set() for _ in range(q.vertex_count)]
    for s, t in q.arrows:
        neighbours[s].add(t)
        neighbours[t].add(s)
    branches = [v for v, nb in enumerate(neighbours) if len(nb) > 2]
    if not branches:
        return ()
    if len(branches) > 1 or len(neighbours[branches[0]]) != 3:
        return None
    centre = branches[0]
    arms = []
    for start in neighbours[centre]:
        length, previous, current = 1, centre, start
        while True:
            onward = neighbours[current] - {previous}
            if not onward:
                break
            (nxt,) = onward
            length, previous, current = length + 1, current, nxt
        arms.append(length)
    return tuple(sorted(arms))


def _check_diagram(kind: str, n: int, q: Quiver) -> None:
    if q.vertex_count != n:
        raise invalid_quiver(f"{kind}_{n} needs {n} vertices, got {q.vertex_count}")
    edges = {frozenset(a) for a in q.arrows}
    if len(q.arrows) != n - 1 or len(edges) != n - 1 or any(len(e) == 1 for e in edges):
        raise invalid_quiver(f"Underlying graph is not a tree on {n} vertices")
    arms = _arm_lengths(q)
    expected = {"A": (), "D": (1, 1, n - 3), "E": (1, 2, n - 4)}[kind]
    if arms != tuple(sorted(expected)):
        raise invalid_quiver(f"Underlying graph is not {kind}_{n}")


@dataclass(frozen=True)
class DynkinQuiver:
    kind: str
    n: int
    quiver: Quiver

    def __post_init__(self):
        if self.kind not in ("A", "D", "E"):
            raise invalid_quiver(f"Unknown Dynkin type '{self.kind}'")
        _check_diagram(self.kind, self.n, self.quiver)

    @property
    def name(self) -> str:
        return f"{self.kind}{self.n}"

    @cached_property
    def coxeter(self) -> ExactMatrix:
        return coxeter_matrix(cartan_matrix(self.quiver))

    @cached_property
    def coxeter_inverse(self) -> ExactMatrix:
        return self.coxeter.inverse()

    @cached_property
    def roots(self) -> tuple[LatticeVector, ...]:
        return tuple(sorted(positive_roots(self)))


def dynkin_quiver(kind: str, n: int, orientation: Sequence[bool] | None = None) -> DynkinQuiver:
    """Build a Dynkin quiver; orientation[i] True reverses the i-th diagram edge."""
    edges = diagram_edges(kind, n)
    flips = list(orientation) if orientation is not None else [False] * len(edges)
    if len(flips) != len(edges):
        raise invalid_quiver(f"{kind}_{n} has {len(edges)} edges, got {len(flips)} orientations")
    arrows = tuple((t, s) if flip else (s, t) for (s, t), flip in zip(edges, flips))
    return DynkinQuiver(kind, n, Quiver(n, arrows))


def parse_diagram(name: str) -> tuple[str, int]:
    """'E6' or 'E_6' -> ('E', 6)."""
    text = name.replace("_", "").strip().upper()
    if len(text) < 2 or not text[1:].isdigit():
        raise invalid_quiver(f"Cannot parse Dynkin diagram '{name}'")
    return text[0], int(text[1:])


def all_orientations(kind: str, n: int) -> list[DynkinQuiver]:
    count = len(diagram_edges(kind, n))
    return [dynkin_quiver(kind, n, flips) for flips in itertools.product((False, True), repeat=count)]


# === Roots ===


def positive_roots(dq: DynkinQuiver) -> set[LatticeVector]:
    """Grow from the simple roots, adding one simple root at a time while the Tits form stays 1."""
    q = dq.quiver
    n = q.vertex_count
    simple = simple_classes(q)
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        d = frontier.pop()
        for v in range(n):
            e = tuple(x + (1 if i == v else 0) for i, x in enumerate(d))
            if e in roots or e[v] > ROOT_COORDINATE_BOUND:
                continue
            if tits_form(q, e) == 1:
                roots.add(e)
                frontier.append(e)
    logger.debug("Enumerated %d positive roots for %s", len(roots), dq.name)
    return roots


# === Objects and functors ===


@dataclass(frozen=True, order=True)
class DerivedObject:
    """The indecomposable X[shift] for X with dimension vector root."""

    root: LatticeVector
    shift: int = 0


def _is_positive(d: Sequence[int]) -> bool:
    return all(x >= 0 for x in d) and any(x > 0 for x in d)


def _signed_step(matrix: ExactMatrix, x: DerivedObject, drop: int) -> DerivedObject:
    image = apply_integral(matrix, x.root)
    if _is_positive(image):
        return DerivedObject(image, x.shift)
    negated = tuple(-v for v in image)
    if not _is_positive(negated):
        raise ValueError(f"Image {image} of root {x.root} is neither positive nor negative")
    return DerivedObject(negated, x.shift + drop)


def tau_derived(x: DerivedObject, dq: DynkinQuiver) -> DerivedObject:
    """tau(d, n) = (Phi d, n) if Phi d > 0 else (-Phi d, n - 1)."""
    return _signed_step(dq.coxeter, x, -1)


def tau_inverse_derived(x: DerivedObject, dq: DynkinQuiver) -> DerivedObject:
    return _signed_step(dq.coxeter_inverse, x, +1)


def shift_by(x: DerivedObject, k: int) -> DerivedObject:
    return DerivedObject(x.root, x.shift + k)


def serre(x: DerivedObject, dq: DynkinQuiver) -> DerivedObject:
    """S = tau[1]."""
    return shift_by(tau_derived(x, dq), 1)


def serre_power(x: DerivedObject, dq: DynkinQuiver, k: int) -> DerivedObject:
    for _ in range(abs(k)):
        x = serre(x, dq) if k > 0 else shift_by(tau_inverse_derived(x, dq), -1)
    return x


def tau_power(x: DerivedObject, dq: DynkinQuiver, k: int) -> DerivedObject:
    for _ in range(abs(k)):
        x = tau_derived(x, dq) if k > 0 else tau_inverse_derived(x, dq)
    return x


def objects(dq: DynkinQuiver, shifts: Iterable[int] = (0,)) -> list[DerivedObject]:
    return [DerivedObject(root, s) for s in shifts for root in dq.roots]


def _uniform_shift(start: Sequence[DerivedObject], current: Sequence[DerivedObject]) -> int | None:
    m = None
    for x, y in zip(start, current):
        if x.root != y.root:
            return None
        delta = y.shift - x.shift
        if m is None:
            m = delta
        elif m != delta:
            return None
    return m


def serre_power_is_shift(dq: DynkinQuiver, n: int) -> int | None:
    """The m with S^n = [m] on every indecomposable, or None."""
    start = objects(dq)
    return _uniform_shift(start, [serre_power(x, dq, n) for x in start])


def cy_dimension(dq: DynkinQuiver, bound: int = 30) -> tuple[int, int]:
    """Minimal n <= bound with S^n a pure shift [m] on all objects."""
    start = objects(dq)
    current = list(start)
    for n in range(1, bound + 1):
        current = [serre(x, dq) for x in current]
        m = _uniform_shift(start, current)
        if m is not None:
            logger.debug("%s is (%d, %d) fractionally Calabi-Yau", dq.name, n, m)
            return n, m
    raise bound_exceeded(bound)


def coxeter_number(dq: DynkinQuiver, max_k: int = 60) -> int:
    h = matrix_order(dq.coxeter, max_k)
    if h is None:
        raise bound_exceeded(max_k)
    return h


# === Table ===


def cy_row(dq: DynkinQuiver) -> CyRow:
    h = coxeter_number(dq)
    n, m = cy_dimension(dq, bound=h)
    reduced = Fraction(m, n)
    return CyRow(
        diagram=dq.name,
        coxeter_number=h,
        n=n,
        m=m,
        reduced=f"{reduced.numerator}/{reduced.denominator}",
        serre_h_shift=serre_power_is_shift(dq, h),
    )


def cy_table(diagrams: Iterable[str] = DEFAULT_TABLE) -> list[CyRow]:
    rows = []
    for name in diagrams:
        kind, n = parse_diagram(name)
        rows.append(cy_row(dynkin_quiver(kind, n)))
    return rows
