"""Explicit quiver representations over exact rationals; Hom and Ext^1 by linear algebra."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ._errors import dimension_mismatch, oriented_cycle, quiver_mismatch
from ._linalg import ExactMatrix, Scalar
from ._models import RepModel
from ._quiver import DimVector, Quiver, euler_form, kronecker_quiver

logger = logging.getLogger(__name__)

Morphism = tuple[ExactMatrix, ...]


@dataclass(frozen=True)
class Rep:
    """A representation: one space per vertex, one matrix dims[t] x dims[s] per arrow s -> t."""

    quiver: Quiver
    dims: DimVector
    arrow_maps: tuple[ExactMatrix, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "arrow_maps", tuple(self.arrow_maps))
        self.quiver.check_vector(dims)
        if any(d < 0 for d in dims):
            raise ValueError("Dimension vector entries must be nonnegative")
        if len(self.arrow_maps) != len(self.quiver.arrows):
            raise dimension_mismatch(len(self.quiver.arrows), len(self.arrow_maps), "arrow map list")
        for (s, t), m in zip(self.quiver.arrows, self.arrow_maps):
            if m.shape != (dims[t], dims[s]):
                raise ValueError(
                    f"Arrow {s}->{t} needs a {dims[t]}x{dims[s]} matrix, got {m.shape[0]}x{m.shape[1]}"
                )

    @property
    def total_dimension(self) -> int:
        return sum(self.dims)

    def to_model(self) -> RepModel:
        return RepModel(
            quiver=self.quiver.to_model(),
            dims=list(self.dims),
            arrow_maps=[m.to_strings() for m in self.arrow_maps],
        )

    @classmethod
    def from_model(cls, model: RepModel) -> Rep:
        quiver = Quiver.from_model(model.quiver)
        maps = tuple(
            ExactMatrix.from_strings(rows, ncols=model.dims[s])
            for (s, _), rows in zip(quiver.arrows, model.arrow_maps)
        )
        return cls(quiver, tuple(model.dims), maps)


def make_rep(q: Quiver, dims: Sequence[int], maps: Sequence[Sequence[Sequence[Scalar]]]) -> Rep:
    """Build a representation from nested lists."""
    matrices = tuple(
        ExactMatrix.from_rows(rows, ncols=dims[s]) for (s, _), rows in zip(q.arrows, maps)
    )
    return Rep(q, tuple(dims), matrices)


@dataclass(frozen=True)
class HomSpace:
    """A basis of module maps M -> N."""

    source: Rep
    target: Rep
    basis: tuple[Morphism, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


# === The intertwiner system ===


def _check_same_quiver(m: Rep, n: Rep) -> None:
    if m.quiver != n.quiver:
        raise quiver_mismatch()


def _variable_offsets(m: Rep, n: Rep) -> list[int]:
    offsets = [0]
    for v in range(m.quiver.vertex_count):
        offsets.append(offsets[-1] + n.dims[v] * m.dims[v])
    return offsets


def _intertwiner_system(m: Rep, n: Rep) -> ExactMatrix:
    """Matrix of phi -> (N_a phi_s - phi_t M_a)_a on the unknowns phi_v (row-major)."""
    offsets = _variable_offsets(m, n)
    ncols = offsets[-1]
    rows: list[list[Fraction]] = []
    for (s, t), m_a, n_a in zip(m.quiver.arrows, m.arrow_maps, n.arrow_maps):
        m_rows = m_a.rows()
        n_rows = n_a.rows()
        for i in range(n.dims[t]):
            for j in range(m.dims[s]):
                row = [Fraction(0)] * ncols
                for p in range(n.dims[s]):
                    row[offsets[s] + p * m.dims[s] + j] += n_rows[i][p]
                for q in range(m.dims[t]):
                    row[offsets[t] + i * m.dims[t] + q] -= m_rows[q][j]
                rows.append(row)
    return ExactMatrix.from_rows(rows, ncols=ncols)


def _unflatten(vector: Sequence[Fraction], m: Rep, n: Rep) -> Morphism:
    offsets = _variable_offsets(m, n)
    blocks = []
    for v in range(m.quiver.vertex_count):
        chunk = vector[offsets[v] : offsets[v + 1]]
        rows = [chunk[p * m.dims[v] : (p + 1) * m.dims[v]] for p in range(n.dims[v])]
        blocks.append(ExactMatrix.from_rows(rows, ncols=m.dims[v]))
    return tuple(blocks)


def hom_ext_dims(m: Rep, n: Rep) -> tuple[int, int]:
    """(dim Hom(M,N), dim Ext^1(M,N)) from one rank computation."""
    _check_same_quiver(m, n)
    system = _intertwiner_system(m, n)
    rank = system.rank()
    return system.ncols - rank, system.nrows - rank


def hom_space(m: Rep, n: Rep) -> HomSpace:
    """All module maps M -> N, as a basis of the intertwiner null space."""
    _check_same_quiver(m, n)
    system = _intertwiner_system(m, n)
    basis = tuple(_unflatten(v, m, n) for v in system.nullspace())
    return HomSpace(m, n, basis)


def ext1_dim(m: Rep, n: Rep) -> int:
    """dim coker of the intertwiner map, valid for any quiver without relations."""
    return hom_ext_dims(m, n)[1]


def is_intertwiner(f: Morphism, m: Rep, n: Rep) -> bool:
    _check_same_quiver(m, n)
    if len(f) != m.quiver.vertex_count:
        return False
    for v, block in enumerate(f):
        if block.shape != (n.dims[v], m.dims[v]):
            return False
    return all(
        n_a @ f[s] == f[t] @ m_a
        for (s, t), m_a, n_a in zip(m.quiver.arrows, m.arrow_maps, n.arrow_maps)
    )


def identity_morphism(m: Rep) -> Morphism:
    return tuple(ExactMatrix.identity(d) for d in m.dims)


def rank_profile(f: Morphism) -> tuple[int, ...]:
    return tuple(block.rank() for block in f)


# === Kernels and cokernels ===


def _column_basis_matrix(vectors: Sequence[Sequence[Fraction]], nrows: int) -> ExactMatrix:
    return ExactMatrix.from_columns(list(vectors), nrows)


def ker_coker(f: Morphism, m: Rep, n: Rep) -> tuple[Rep, Rep]:
    """Vertexwise kernel and cokernel of f: M -> N with induced arrow maps."""
    if not is_intertwiner(f, m, n):
        raise ValueError("f is not a module map M -> N")
    q = m.quiver
    kernels: list[ExactMatrix] = []
    projections: list[ExactMatrix] = []
    sections: list[ExactMatrix] = []
    for v, block in enumerate(f):
        kernels.append(_column_basis_matrix(block.nullspace(), m.dims[v]))
        left = block.left_nullspace()
        proj = ExactMatrix.from_rows(left, ncols=n.dims[v])
        projections.append(proj)
        if proj.nrows:
            sections.append(proj.transpose() @ (proj @ proj.transpose()).inverse())
        else:
            sections.append(ExactMatrix.zeros(n.dims[v], 0))

    ker_maps = []
    coker_maps = []
    for (s, t), m_a, n_a in zip(q.arrows, m.arrow_maps, n.arrow_maps):
        ker_maps.append(kernels[t].solve(m_a @ kernels[s]))
        coker_maps.append(projections[t] @ n_a @ sections[s])

    ker = Rep(q, tuple(k.ncols for k in kernels), tuple(ker_maps))
    coker = Rep(q, tuple(p.nrows for p in projections), tuple(coker_maps))
    return ker, coker


# === Standard modules ===


def zero_rep(q: Quiver) -> Rep:
    return Rep(q, (0,) * q.vertex_count, tuple(ExactMatrix.zeros(0, 0) for _ in q.arrows))


def simple_rep(q: Quiver, v: int) -> Rep:
    dims = tuple(1 if w == v else 0 for w in range(q.vertex_count))
    maps = tuple(ExactMatrix.zeros(dims[t], dims[s]) for s, t in q.arrows)
    return Rep(q, dims, maps)


def interval_rep(q: Quiver, first: int, last: int) -> Rep:
    """Thin module supported on vertices first..last, with 1x1 identities on arrows inside.

    On a path quiver whose arrows join consecutive vertices this is the indecomposable
    with dimension vector the indicator of the interval.
    """
    if not 0 <= first <= last < q.vertex_count:
        raise ValueError(f"Interval [{first}, {last}] is not inside 0..{q.vertex_count - 1}")
    dims = tuple(1 if first <= w <= last else 0 for w in range(q.vertex_count))
    maps = tuple(
        ExactMatrix.identity(1) if dims[s] and dims[t] else ExactMatrix.zeros(dims[t], dims[s])
        for s, t in q.arrows
    )
    return Rep(q, dims, maps)


def _paths_from(q: Quiver, v: int) -> list[tuple[int, tuple[int, ...]]]:
    """All paths starting at v as (end vertex, arrow indices)."""
    if not q.acyclic:
        raise oriented_cycle()
    paths = [(v, ())]
    frontier = [(v, ())]
    while frontier:
        end, arrows = frontier.pop()
        for index, (s, t) in enumerate(q.arrows):
            if s == end:
                path = (t, arrows + (index,))
                paths.append(path)
                frontier.append(path)
    return paths


def projective_rep(q: Quiver, v: int) -> Rep:
    """P_v: basis at w is the set of paths v -> w; arrows extend paths."""
    paths = _paths_from(q, v)
    at = [[p for p in paths if p[0] == w] for w in range(q.vertex_count)]
    maps = []
    for index, (s, t) in enumerate(q.arrows):
        rows = [[0] * len(at[s]) for _ in at[t]]
        for j, (_, arrows) in enumerate(at[s]):
            extended = (t, arrows + (index,))
            rows[at[t].index(extended)][j] = 1
        maps.append(ExactMatrix.from_rows(rows, ncols=len(at[s])))
    return Rep(q, tuple(len(a) for a in at), tuple(maps))


def injective_rep(q: Quiver, v: int) -> Rep:
    """I_v: basis at w is dual to the paths w -> v; arrow a sends (a.p)* to p*."""
    at: list[list[tuple[int, ...]]] = []
    for w in range(q.vertex_count):
        at.append([arrows for end, arrows in _paths_from(q, w) if end == v])
    maps = []
    for index, (s, t) in enumerate(q.arrows):
        rows = [[0] * len(at[s]) for _ in at[t]]
        for j, arrows in enumerate(at[s]):
            if arrows and arrows[0] == index:
                rows[at[t].index(arrows[1:])][j] = 1
        maps.append(ExactMatrix.from_rows(rows, ncols=len(at[s])))
    return Rep(q, tuple(len(a) for a in at), tuple(maps))


def direct_sum(m: Rep, n: Rep) -> Rep:
    _check_same_quiver(m, n)
    dims = tuple(a + b for a, b in zip(m.dims, n.dims))
    maps = tuple(
        ExactMatrix.block_diagonal([m_a, n_a]) for m_a, n_a in zip(m.arrow_maps, n.arrow_maps)
    )
    return Rep(m.quiver, dims, maps)


def is_exceptional(m: Rep) -> bool:
    """dim End(M) = 1 and Ext^1(M, M) = 0."""
    return hom_ext_dims(m, m) == (1, 0)


def is_brick(m: Rep) -> bool:
    return hom_ext_dims(m, m)[0] == 1


def is_nilpotent(m: Rep) -> bool:
    """Every sufficiently long path acts as zero (certificate for membership in nilp)."""
    q = m.quiver
    spans = [ExactMatrix.identity(d) for d in m.dims]
    for _ in range(m.total_dimension + 1):
        if all(span.ncols == 0 for span in spans):
            return True
        columns: list[list[tuple[Fraction, ...]]] = [[] for _ in range(q.vertex_count)]
        for (s, t), n_a in zip(q.arrows, m.arrow_maps):
            columns[t].extend((n_a @ spans[s]).columns())
        spans = []
        for v, cols in enumerate(columns):
            if not cols:
                spans.append(ExactMatrix.zeros(m.dims[v], 0))
                continue
            reduced, pivots = ExactMatrix.from_rows(cols, ncols=m.dims[v]).rref()
            basis = reduced.rows()[: len(pivots)]
            spans.append(ExactMatrix.from_columns(basis, m.dims[v]))
    return all(span.ncols == 0 for span in spans)


def euler_check(m: Rep, n: Rep) -> bool:
    """dim Hom - dim Ext^1 equals the Euler form on dimension vectors."""
    hom, ext = hom_ext_dims(m, n)
    return hom - ext == euler_form(m.quiver, m.dims, n.dims)


# === The Kronecker menagerie ===

X, Y = 0, 1


@dataclass(frozen=True)
class KroneckerFamily:
    """Named modules over K_2 (x = vertex 0, y = vertex 1, arrows a, b: x -> y)."""

    quiver: Quiver

    @property
    def p_x(self) -> Rep:
        return self.preprojective(1)

    @property
    def p_y(self) -> Rep:
        return self.preprojective(0)

    @property
    def i_x(self) -> Rep:
        return self.preinjective(0)

    @property
    def i_y(self) -> Rep:
        return self.preinjective(1)

    def regular(self, f: tuple[Scalar, Scalar]) -> Rep:
        """R_f for f = (lambda : mu): dims (1,1), arrow maps (lambda), (mu)."""
        lam, mu = f
        if lam == 0 and mu == 0:
            raise ValueError("f must be nonzero")
        return make_rep(self.quiver, (1, 1), [[[lam]], [[mu]]])

    def preprojective(self, n: int) -> Rep:
        """Dims (n, n+1): a = [I; 0], b = [0; I]."""
        if n < 0:
            raise ValueError("n must be nonnegative")
        a = [[1 if i == j else 0 for j in range(n)] for i in range(n + 1)]
        b = [[1 if i == j + 1 else 0 for j in range(n)] for i in range(n + 1)]
        return make_rep(self.quiver, (n, n + 1), [a, b])

    def preinjective(self, n: int) -> Rep:
        """Dims (n+1, n): a = [I | 0], b = [0 | I]."""
        if n < 0:
            raise ValueError("n must be nonnegative")
        a = [[1 if j == i else 0 for j in range(n + 1)] for i in range(n)]
        b = [[1 if j == i + 1 else 0 for j in range(n + 1)] for i in range(n)]
        return make_rep(self.quiver, (n + 1, n), [a, b])

    def monomorphism(self, f: tuple[Scalar, Scalar]) -> Morphism:
        """P_y -> P_x with cokernel R_f: e_y goes to -mu a + lambda b."""
        lam, mu = f
        if lam == 0 and mu == 0:
            raise ValueError("f must be nonzero")
        at_x = ExactMatrix.zeros(1, 0)
        at_y = ExactMatrix.from_rows([[-mu], [lam]])
        return (at_x, at_y)

    def projection(self, f: tuple[Scalar, Scalar]) -> Morphism:
        """P_x -> R_f, the cokernel map of monomorphism(f)."""
        lam, mu = f
        return (ExactMatrix.identity(1), ExactMatrix.from_rows([[lam, mu]]))


def kronecker_objects(f: tuple[Scalar, Scalar] = (1, 0)) -> tuple[KroneckerFamily, Rep]:
    """The Kronecker family together with R_f (validates f != 0)."""
    family = KroneckerFamily(kronecker_quiver(2))
    return family, family.regular(f)


def representation_type(n: int) -> str:
    """Representation type of the n-Kronecker quiver."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return "finite"
    if n == 2:
        return "tame"
    return "wild"


def wild_witness(n: int) -> Rep:
    """An indecomposable of dims (1, 2) over K_n; chi < 0 once n >= 3."""
    q = kronecker_quiver(n)
    columns = [[[1], [0]], [[0], [1]]] + [[[1], [1]]] + [[[0], [0]]] * max(0, n - 3)
    return make_rep(q, (1, 2), columns[:n])
