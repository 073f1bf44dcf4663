"""Exact rational matrices backed by sympy's DomainMatrix over QQ."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ._errors import dimension_mismatch, not_invertible

Scalar = int | Fraction
Vector = tuple[Fraction, ...]


def _to_qq(x: Scalar):
    f = Fraction(x)
    return QQ(f.numerator, f.denominator)


def _from_qq(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def as_fraction(text: str | int | Fraction) -> Fraction:
    """Parse "p/q", "n" or a number into a Fraction."""
    return Fraction(text)


def fraction_str(x: Scalar) -> str:
    """Render a rational as "p/q", or "n" when integral."""
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


class ExactMatrix:
    """Immutable exact-rational matrix with an explicit shape."""

    __slots__ = ("_dm", "_rows")

    def __init__(self, dm: DomainMatrix):
        # sympy refuses to mix sparse and dense operands
        self._dm = dm.to_dense()
        self._rows: tuple[Vector, ...] | None = None

    # === Construction ===

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Scalar]], ncols: int | None = None) -> ExactMatrix:
        """Build from row lists; `ncols` is required when there are no rows."""
        data = [[_to_qq(x) for x in row] for row in rows]
        if ncols is None:
            if not data:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(data[0])
        for row in data:
            if len(row) != ncols:
                raise dimension_mismatch(ncols, len(row), "row")
        return cls(DomainMatrix(data, (len(data), ncols), QQ))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]], nrows: int) -> ExactMatrix:
        """Build from column vectors of length `nrows`."""
        rows = [[col[i] for col in columns] for i in range(nrows)]
        return cls.from_rows(rows, ncols=len(columns))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> ExactMatrix:
        return cls(DomainMatrix.zeros((nrows, ncols), QQ))

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls(DomainMatrix.eye(n, QQ))

    @classmethod
    def block_diagonal(cls, blocks: Sequence[ExactMatrix]) -> ExactMatrix:
        nrows = sum(b.nrows for b in blocks)
        ncols = sum(b.ncols for b in blocks)
        rows = [[Fraction(0)] * ncols for _ in range(nrows)]
        r0 = c0 = 0
        for block in blocks:
            for i, row in enumerate(block.rows()):
                for j, x in enumerate(row):
                    rows[r0 + i][c0 + j] = x
            r0 += block.nrows
            c0 += block.ncols
        return cls.from_rows(rows, ncols=ncols)

    # === Shape and entries ===

    @property
    def shape(self) -> tuple[int, int]:
        return self._dm.shape

    @property
    def nrows(self) -> int:
        return self._dm.shape[0]

    @property
    def ncols(self) -> int:
        return self._dm.shape[1]

    def rows(self) -> tuple[Vector, ...]:
        if self._rows is None:
            if self.nrows == 0 or self.ncols == 0:
                self._rows = tuple(() for _ in range(self.nrows))
            else:
                self._rows = tuple(tuple(_from_qq(x) for x in row) for row in self._dm.to_list())
        return self._rows

    def columns(self) -> tuple[Vector, ...]:
        return self.transpose().rows()

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows()[i][j]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows())

    # === Arithmetic ===

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.ncols != other.nrows:
            raise dimension_mismatch(self.ncols, other.nrows, "matrix")
        if self.ncols == 0 or self.nrows == 0 or other.ncols == 0:
            return ExactMatrix.zeros(self.nrows, other.ncols)
        return ExactMatrix(self._dm.matmul(other._dm))

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        if self.shape != other.shape:
            raise dimension_mismatch(self.ncols, other.ncols, "matrix")
        if 0 in self.shape:
            return self
        return ExactMatrix(self._dm.add(other._dm))

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return self + (-other)

    def __neg__(self) -> ExactMatrix:
        if 0 in self.shape:
            return self
        return ExactMatrix(self._dm.neg())

    def scale(self, c: Scalar) -> ExactMatrix:
        return ExactMatrix.from_rows(
            [[c * x for x in row] for row in self.rows()], ncols=self.ncols
        )

    def transpose(self) -> ExactMatrix:
        if 0 in self.shape:
            return ExactMatrix.zeros(self.ncols, self.nrows)
        return ExactMatrix(self._dm.transpose())

    def __pow__(self, k: int) -> ExactMatrix:
        if self.nrows != self.ncols:
            raise dimension_mismatch(self.nrows, self.ncols, "square matrix")
        if k < 0:
            return self.inverse() ** (-k)
        if self.nrows == 0:
            return self
        return ExactMatrix(self._dm.pow(k))

    def apply(self, vector: Sequence[Scalar]) -> Vector:
        """Matrix times column vector."""
        if len(vector) != self.ncols:
            raise dimension_mismatch(self.ncols, len(vector))
        return tuple(
            sum((x * Fraction(v) for x, v in zip(row, vector)), Fraction(0))
            for row in self.rows()
        )

    def bilinear(self, d: Sequence[Scalar], e: Sequence[Scalar]) -> Fraction:
        """d^T M e."""
        if len(d) != self.nrows:
            raise dimension_mismatch(self.nrows, len(d))
        me = self.apply(e)
        return sum((Fraction(x) * y for x, y in zip(d, me)), Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows() == other.rows()

    def __hash__(self) -> int:
        return hash((self.shape, self.rows()))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(fraction_str(x) for x in row) + "]" for row in self.rows())
        return f"ExactMatrix([{body}])"

    # === Predicates ===

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and self == ExactMatrix.identity(self.nrows)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows() for x in row)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.rows() for x in row)

    def is_antisymmetric(self) -> bool:
        return self == -self.transpose()

    # === Gaussian elimination ===

    def rref(self) -> tuple[ExactMatrix, tuple[int, ...]]:
        """Reduced row echelon form and pivot columns."""
        if 0 in self.shape:
            return self, ()
        reduced, pivots = self._dm.rref()
        return ExactMatrix(reduced), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[Vector]:
        """Basis of {v : M v = 0}, one vector per free column."""
        n = self.ncols
        reduced, pivots = self.rref()
        rows = reduced.rows()
        basis: list[Vector] = []
        for free in (j for j in range(n) if j not in pivots):
            v = [Fraction(0)] * n
            v[free] = Fraction(1)
            for i, p in enumerate(pivots):
                v[p] = -rows[i][free]
            basis.append(tuple(v))
        return basis

    def left_nullspace(self) -> list[Vector]:
        """Basis of {y : y^T M = 0}."""
        return self.transpose().nullspace()

    def inverse(self) -> ExactMatrix:
        if self.nrows != self.ncols:
            raise not_invertible()
        if self.nrows == 0:
            return self
        if self.rank() != self.nrows:
            raise not_invertible()
        return ExactMatrix(self._dm.inv())

    def solve(self, rhs: ExactMatrix) -> ExactMatrix:
        """Unique X with M X = rhs, for M of full column rank."""
        if rhs.nrows != self.nrows:
            raise dimension_mismatch(self.nrows, rhs.nrows, "right-hand side")
        if self.ncols == 0:
            return ExactMatrix.zeros(0, rhs.ncols)
        augmented = [list(a) + list(b) for a, b in zip(self.rows(), rhs.rows())]
        reduced, pivots = ExactMatrix.from_rows(augmented, ncols=self.ncols + rhs.ncols).rref()
        if tuple(pivots[: self.ncols]) != tuple(range(self.ncols)) or len(pivots) > self.ncols:
            raise ValueError("System has no unique solution")
        rows = reduced.rows()
        return ExactMatrix.from_rows(
            [row[self.ncols :] for row in rows[: self.ncols]], ncols=rhs.ncols
        )

    def to_strings(self) -> list[list[str]]:
        return [[fraction_str(x) for x in row] for row in self.rows()]

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]], ncols: int) -> ExactMatrix:
        return cls.from_rows([[as_fraction(x) for x in row] for row in rows], ncols=ncols)


def integer_vector(v: Sequence[Scalar]) -> tuple[int, ...]:
    """Convert an integral rational vector to ints."""
    out = []
    for x in v:
        f = Fraction(x)
        if f.denominator != 1:
            raise ValueError(f"Vector entry {f} is not an integer")
        out.append(f.numerator)
    return tuple(out)


def dot(d: Sequence[Scalar], e: Sequence[Scalar]) -> Fraction:
    if len(d) != len(e):
        raise dimension_mismatch(len(d), len(e))
    return sum((Fraction(x) * Fraction(y) for x, y in zip(d, e)), Fraction(0))
