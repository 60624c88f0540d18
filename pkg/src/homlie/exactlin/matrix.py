"""Immutable dense matrices over Q.

Vectors are plain tuples of rationals; a :class:`Matrix` acts on them from
the left (``m @ v``).  Products skip zero entries, which matters because the
matrices built by the chain-complex code are overwhelmingly sparse.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import DimensionError
from . import _backend
from .scalar import Q, Rational, format_rational, norm

Vector = tuple


def vec(values: Iterable) -> Vector:
    return tuple(Q(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (0,) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [0] * n
    v[i] = 1
    return tuple(v)


def vadd(u: Sequence[Rational], v: Sequence[Rational]) -> Vector:
    return tuple(norm(a + b) for a, b in zip(u, v))


def vsub(u: Sequence[Rational], v: Sequence[Rational]) -> Vector:
    return tuple(norm(a - b) for a, b in zip(u, v))


def vscale(c: Rational, v: Sequence[Rational]) -> Vector:
    if not c:
        return (0,) * len(v)
    return tuple(norm(c * a) for a in v)


def is_zero(v: Iterable[Rational]) -> bool:
    return not any(v)


def lincomb(terms: Iterable[tuple[Rational, Sequence[Rational]]], n: int) -> Vector:
    """Sum of ``c * v`` over ``(c, v)`` pairs, as a length-``n`` vector."""
    acc: list[Rational] = [0] * n
    for c, v in terms:
        if not c:
            continue
        for k, a in enumerate(v):
            if a:
                acc[k] += c * a
    return tuple(norm(a) for a in acc)


class Matrix:
    """A ``nrows x ncols`` matrix with exact rational entries."""

    __slots__ = ("_rows", "nrows", "ncols", "_hash")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(Q(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for r in data:
            if len(r) != ncols:
                raise DimensionError("ragged matrix rows")
        self._rows = data
        self.nrows = len(data)
        self.ncols = ncols
        self._hash = None

    @classmethod
    def _raw(cls, rows: tuple, nrows: int, ncols: int) -> "Matrix":
        m = object.__new__(cls)
        m._rows = rows
        m.nrows = nrows
        m.ncols = ncols
        m._hash = None
        return m

    # constructors

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls._raw(((0,) * ncols,) * nrows, nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(tuple(unit_vector(n, i) for i in range(n)), n, n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Rational]], nrows: int | None = None) -> "Matrix":
        cols = [tuple(Q(x) for x in c) for c in columns]
        if nrows is None:
            if not cols:
                raise DimensionError("nrows required for a matrix without columns")
            nrows = len(cols[0])
        for c in cols:
            if len(c) != nrows:
                raise DimensionError("columns of unequal length")
        rows = tuple(tuple(c[i] for c in cols) for i in range(nrows))
        return cls._raw(rows, nrows, len(cols))

    @classmethod
    def diagonal(cls, entries: Sequence[Rational]) -> "Matrix":
        n = len(entries)
        return cls._raw(
            tuple(tuple(Q(entries[i]) if i == j else 0 for j in range(n)) for i in range(n)), n, n
        )

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def rows(self) -> tuple[Vector, ...]:
        return self._rows

    def __getitem__(self, idx):
        i, j = idx
        return self._rows[i][j]

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[Vector]:
        if self.nrows == 0:
            return [()] * self.ncols
        return [tuple(c) for c in zip(*self._rows)]

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(tuple(self.columns()), self.ncols, self.nrows)

    def tolist(self) -> list[list[Rational]]:
        return [list(r) for r in self._rows]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._raw(
            tuple(tuple(self._rows[i][j] for j in cols) for i in rows), len(rows), len(cols)
        )

    # arithmetic

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            brows = [[(j, b) for j, b in enumerate(r) if b] for r in other._rows]
            n = other.ncols
            out = []
            for r in self._rows:
                acc: list[Rational] = [0] * n
                for k, a in enumerate(r):
                    if a:
                        for j, b in brows[k]:
                            acc[j] += a * b
                out.append(tuple(norm(x) for x in acc))
            return Matrix._raw(tuple(out), self.nrows, n)
        v = tuple(other)
        if len(v) != self.ncols:
            raise DimensionError(f"cannot apply {self.shape} matrix to length-{len(v)} vector")
        nz = [(k, a) for k, a in enumerate(v) if a]
        return tuple(norm(sum(r[k] * a for k, a in nz)) for r in self._rows)

    def apply(self, v: Sequence[Rational]) -> Vector:
        return self @ v

    def _check_same(self, other: "Matrix") -> None:
        if not isinstance(other, Matrix) or self.shape != other.shape:
            raise DimensionError("matrix shapes differ")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(tuple(vadd(a, b) for a, b in zip(self._rows, other._rows)), *self.shape)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(tuple(vsub(a, b) for a, b in zip(self._rows, other._rows)), *self.shape)

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-x for x in r) for r in self._rows), *self.shape)

    def scale(self, c) -> "Matrix":
        c = Q(c)
        return Matrix._raw(tuple(vscale(c, r) for r in self._rows), *self.shape)

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Matrix":
        if self.nrows != self.ncols or k < 0:
            raise DimensionError("matrix power needs a square matrix and k >= 0")
        out = Matrix.identity(self.nrows)
        for _ in range(k):
            out = out @ self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nrows, self.ncols, self._rows))
        return self._hash

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._rows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    # block assembly

    @staticmethod
    def hstack(*blocks: "Matrix") -> "Matrix":
        nrows = blocks[0].nrows
        if any(b.nrows != nrows for b in blocks):
            raise DimensionError("hstack blocks need equal row counts")
        rows = tuple(sum((b._rows[i] for b in blocks), ()) for i in range(nrows))
        return Matrix._raw(rows, nrows, sum(b.ncols for b in blocks))

    @staticmethod
    def vstack(*blocks: "Matrix") -> "Matrix":
        ncols = blocks[0].ncols
        if any(b.ncols != ncols for b in blocks):
            raise DimensionError("vstack blocks need equal column counts")
        return Matrix._raw(sum((b._rows for b in blocks), ()), sum(b.nrows for b in blocks), ncols)

    @staticmethod
    def block_diag(*blocks: "Matrix") -> "Matrix":
        ncols = sum(b.ncols for b in blocks)
        rows = []
        offset = 0
        for b in blocks:
            for r in b._rows:
                rows.append((0,) * offset + r + (0,) * (ncols - offset - b.ncols))
            offset += b.ncols
        return Matrix._raw(tuple(rows), len(rows), ncols)

    # elimination-based queries

    def rref(self) -> tuple[list[Vector], list[int]]:
        return _backend.rref(self._rows, self.ncols)

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> Rational:
        if not self.is_square():
            raise DimensionError("determinant of a non-square matrix")
        a = [list(r) for r in self._rows]
        n = self.nrows
        det: Rational = 1
        for c in range(n):
            p = next((i for i in range(c, n) if a[i][c]), None)
            if p is None:
                return 0
            if p != c:
                a[p], a[c] = a[c], a[p]
                det = -det
            pv = a[c][c]
            det *= pv
            for i in range(c + 1, n):
                f = a[i][c]
                if f:
                    f = Fraction(f) / pv
                    a[i] = [x - f * y for x, y in zip(a[i], a[c])]
        return norm(det)

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise DimensionError("inverse of a non-square matrix")
        n = self.nrows
        aug = Matrix.hstack(self, Matrix.identity(n))
        rows, pivots = aug.rref()
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise ZeroDivisionError("matrix is singular")
        return Matrix._raw(tuple(tuple(r[n:]) for r in rows), n, n)

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.nrows

    # display

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(format_rational(x) for x in r) + "]" for r in self._rows)
        return f"Matrix([{body}])" if self.nrows else f"Matrix.zeros(0, {self.ncols})"

    def __str__(self) -> str:
        if not self.nrows:
            return f"<empty 0x{self.ncols} matrix>"
        cells = [[format_rational(x) for x in r] for r in self._rows]
        w = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)
