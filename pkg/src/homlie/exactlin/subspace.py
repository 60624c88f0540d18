"""Subspaces and quotient spaces of Q^n in canonical form.

A :class:`Subspace` stores the reduced row echelon form of any spanning set,
transposed into columns.  Because the RREF of a row space is unique, equal
subspaces always have identical ``basis`` matrices and comparison is plain
equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..errors import DimensionError
from . import _backend
from .matrix import Matrix, Vector, is_zero, unit_vector
from .scalar import Rational, norm


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: Matrix
    pivots: tuple[int, ...] = field(compare=False)

    @classmethod
    def span(cls, vectors: Iterable[Sequence[Rational]], ambient_dim: int) -> "Subspace":
        vs = [tuple(v) for v in vectors]
        for v in vs:
            if len(v) != ambient_dim:
                raise DimensionError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        rows, pivots = _backend.rref(vs, ambient_dim)
        return cls(ambient_dim, Matrix.from_columns(rows, ambient_dim), tuple(pivots))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, Matrix.zeros(n, 0), ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, Matrix.identity(n), tuple(range(n)))

    @property
    def dim(self) -> int:
        return self.basis.ncols

    def vectors(self) -> list[Vector]:
        return self.basis.columns()

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def residual(self, v: Sequence[Rational]) -> Vector:
        """``v`` minus its canonical component in the subspace."""
        if len(v) != self.ambient_dim:
            raise DimensionError("vector length does not match ambient dimension")
        r = list(v)
        for k, p in enumerate(self.pivots):
            c = r[p]
            if c:
                for i, b in enumerate(self.basis.rows):
                    if b[k]:
                        r[i] -= c * b[k]
        return tuple(norm(x) for x in r)

    def contains(self, v: Sequence[Rational]) -> bool:
        return is_zero(self.residual(v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def coordinates(self, v: Sequence[Rational]) -> Vector:
        """Coordinates of ``v`` in the canonical basis; ValueError if v is outside."""
        if not self.contains(v):
            raise ValueError("vector does not lie in the subspace")
        return tuple(v[p] for p in self.pivots)

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.vectors())

    def __le__(self, other: "Subspace") -> bool:
        return self.is_subspace_of(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def image_under(self, m: Matrix) -> "Subspace":
        if m.ncols != self.ambient_dim:
            raise DimensionError("matrix does not act on this subspace's ambient space")
        return Subspace.span((m @ v for v in self.vectors()), m.nrows)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim}, basis={self.vectors()!r})"


@dataclass(frozen=True)
class QuotientSpace:
    """``Q^ambient_dim / relations`` with representatives on the free coordinates.

    The coordinates that are not pivots of the relations' echelon form serve
    as coordinates on the quotient, so ``project`` reduces a vector modulo the
    relations and reads off those coordinates, and ``section`` embeds them
    back as a vector supported on the free coordinates.
    """

    ambient_dim: int
    relations: Subspace
    repr_dim: int
    project: Matrix
    section: Matrix
    free_coords: tuple[int, ...]

    def reduce(self, v: Sequence[Rational]) -> Vector:
        return self.project @ v

    def lift(self, w: Sequence[Rational]) -> Vector:
        return self.section @ w


def rank(m: Matrix) -> int:
    return m.rank()


def kernel(m: Matrix) -> Subspace:
    rows, pivots = m.rref()
    n = m.ncols
    pivset = set(pivots)
    vectors = []
    for f in range(n):
        if f in pivset:
            continue
        v = [0] * n
        v[f] = 1
        for r, p in zip(rows, pivots):
            if r[f]:
                v[p] = -r[f]
        vectors.append(v)
    return Subspace.span(vectors, n)


def image(m: Matrix) -> Subspace:
    return Subspace.span(m.columns(), m.nrows)


def solve(m: Matrix, b: Sequence[Rational]) -> Vector | None:
    """Some ``x`` with ``m @ x == b``, or ``None`` when the system is inconsistent."""
    if len(b) != m.nrows:
        raise DimensionError("right-hand side length does not match the row count")
    n = m.ncols
    aug = [r + (bi,) for r, bi in zip(m.rows, b)]
    rows, pivots = _backend.rref(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [0] * n
    for r, p in zip(rows, pivots):
        x[p] = r[n]
    return tuple(x)


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    s1._check(s2)
    return Subspace.span(s1.vectors() + s2.vectors(), s1.ambient_dim)


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    s1._check(s2)
    n = s1.ambient_dim
    if s1.dim == 0 or s2.dim == 0:
        return Subspace.zero(n)
    stacked = Matrix.hstack(s1.basis, -s2.basis)
    coeffs = kernel(stacked)
    return Subspace.span((s1.basis @ v[: s1.dim] for v in coeffs.vectors()), n)


def contains(s: Subspace, v: Sequence[Rational]) -> bool:
    return s.contains(v)


def quotient(ambient_dim: int, relations: Subspace) -> QuotientSpace:
    if relations.ambient_dim != ambient_dim:
        raise DimensionError("relations live in a different ambient space")
    pivots = relations.pivots
    pivset = set(pivots)
    free = tuple(j for j in range(ambient_dim) if j not in pivset)
    q = len(free)
    where = {j: k for k, j in enumerate(free)}
    rel_rows = relations.basis.columns()
    cols = []
    for j in range(ambient_dim):
        if j in where:
            cols.append(unit_vector(q, where[j]))
        else:
            r = rel_rows[pivots.index(j)]
            cols.append(tuple(norm(-r[f]) for f in free))
    project = Matrix.from_columns(cols, q)
    section = Matrix.from_columns([unit_vector(ambient_dim, f) for f in free], ambient_dim)
    return QuotientSpace(ambient_dim, relations, q, project, section, free)
