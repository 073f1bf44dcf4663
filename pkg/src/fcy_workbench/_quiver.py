"""Quivers, dimension vectors, and the Cartan/Euler/Coxeter matrices."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from ._errors import dimension_mismatch, invalid_quiver, not_invertible, oriented_cycle
from ._linalg import ExactMatrix, Scalar, integer_vector
from ._models import QuiverModel

LatticeVector = tuple[int, ...]
DimVector = tuple[int, ...]


@dataclass(frozen=True)
class Quiver:
    """A finite connected quiver; arrows act left to right (source -> target)."""

    vertex_count: int
    arrows: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if self.vertex_count < 1:
            raise invalid_quiver("A quiver needs at least one vertex")
        arrows = tuple((int(s), int(t)) for s, t in self.arrows)
        object.__setattr__(self, "arrows", arrows)
        for s, t in arrows:
            if not (0 <= s < self.vertex_count and 0 <= t < self.vertex_count):
                raise invalid_quiver(f"Arrow ({s}, {t}) has an endpoint out of range")
        if not self._is_connected():
            raise invalid_quiver("Quiver is not connected")

    def _is_connected(self) -> bool:
        seen = {0}
        frontier = [0]
        while frontier:
            v = frontier.pop()
            for s, t in self.arrows:
                for a, b in ((s, t), (t, s)):
                    if a == v and b not in seen:
                        seen.add(b)
                        frontier.append(b)
        return len(seen) == self.vertex_count

    @cached_property
    def acyclic(self) -> bool:
        """True when there is no oriented cycle (loops included)."""
        indegree = [0] * self.vertex_count
        for _, t in self.arrows:
            indegree[t] += 1
        ready = [v for v in range(self.vertex_count) if indegree[v] == 0]
        visited = 0
        while ready:
            v = ready.pop()
            visited += 1
            for s, t in self.arrows:
                if s == v:
                    indegree[t] -= 1
                    if indegree[t] == 0:
                        ready.append(t)
        return visited == self.vertex_count

    def arrow_matrix(self) -> ExactMatrix:
        """A[i][j] = number of arrows i -> j."""
        rows = [[0] * self.vertex_count for _ in range(self.vertex_count)]
        for s, t in self.arrows:
            rows[s][t] += 1
        return ExactMatrix.from_rows(rows)

    def check_vector(self, d: Sequence[Scalar]) -> None:
        if len(d) != self.vertex_count:
            raise dimension_mismatch(self.vertex_count, len(d))

    def to_model(self) -> QuiverModel:
        return QuiverModel(vertices=self.vertex_count, arrows=[list(a) for a in self.arrows])

    @classmethod
    def from_model(cls, model: QuiverModel) -> Quiver:
        return cls(model.vertices, tuple((s, t) for s, t in model.arrows))


# === Standard quivers ===


def kronecker_quiver(n: int) -> Quiver:
    """K_n: vertices x=0, y=1 and n arrows x -> y."""
    if n < 1:
        raise invalid_quiver("K_n needs n >= 1")
    return Quiver(2, tuple((0, 1) for _ in range(n)))


def cyclic_quiver(r: int) -> Quiver:
    """The cyclic orientation of A~_{r-1}: arrows v -> v+1 mod r (a loop for r=1)."""
    return Quiver(r, tuple((v, (v + 1) % r) for v in range(r)))


def path_quiver(n: int, reversed_edges: Sequence[int] = ()) -> Quiver:
    """A_n with edges i -> i+1, except the listed edge indices which point i+1 -> i."""
    flipped = set(reversed_edges)
    arrows = tuple((i + 1, i) if i in flipped else (i, i + 1) for i in range(n - 1))
    return Quiver(n, arrows)


# === Forms and matrices ===


def euler_form(q: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """chi(d, e) = sum_v d_v e_v - sum_{a: i->j} d_i e_j (path algebras without relations)."""
    q.check_vector(d)
    q.check_vector(e)
    diagonal = sum(x * y for x, y in zip(d, e))
    return diagonal - sum(d[s] * e[t] for s, t in q.arrows)


def tits_form(q: Quiver, d: Sequence[int]) -> int:
    return euler_form(q, d, d)


def cartan_matrix(q: Quiver) -> ExactMatrix:
    """C[v][w] = number of paths w -> v, so column w is [P_w]."""
    if not q.acyclic:
        raise oriented_cycle()
    n = q.vertex_count
    # (I - A)^{-1} = sum of A^k counts paths, A being nilpotent
    paths = (ExactMatrix.identity(n) - q.arrow_matrix()).inverse()
    return paths.transpose()


def euler_matrix(c: ExactMatrix) -> ExactMatrix:
    """E = C^{-T}, the unique matrix with chi([P_i], [S_j]) = delta_ij."""
    inverse = c.inverse()
    if not inverse.is_integral():
        raise not_invertible("Cartan matrix")
    return inverse.transpose()


def coxeter_matrix(c: ExactMatrix) -> ExactMatrix:
    """Phi = -C^T C^{-1}, so that Phi [P_v] = -[I_v]."""
    inverse = c.inverse()
    if not inverse.is_integral():
        raise not_invertible("Cartan matrix")
    return -(c.transpose() @ inverse)


def matrix_order(m: ExactMatrix, max_k: int) -> int | None:
    """Smallest k <= max_k with m^k = id, or None."""
    power = m
    for k in range(1, max_k + 1):
        if power.is_identity():
            return k
        power = power @ m
    return None


def projective_classes(q: Quiver) -> list[LatticeVector]:
    return [integer_vector(col) for col in cartan_matrix(q).columns()]


def injective_classes(q: Quiver) -> list[LatticeVector]:
    return [integer_vector(row) for row in cartan_matrix(q).rows()]


def simple_classes(q: Quiver) -> list[LatticeVector]:
    n = q.vertex_count
    return [tuple(1 if i == v else 0 for i in range(n)) for v in range(n)]


def apply_integral(m: ExactMatrix, d: Sequence[int]) -> LatticeVector:
    return integer_vector(m.apply(d))


def serre_identity(q: Quiver, d: Sequence[int], e: Sequence[int]) -> bool:
    """chi(d, e) = -chi(e, Phi d): Serre duality on the Grothendieck group."""
    phi = coxeter_matrix(cartan_matrix(q))
    return euler_form(q, d, e) == -euler_form(q, e, apply_integral(phi, d))
