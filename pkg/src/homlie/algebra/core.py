"""The Hom-Lie algebra data model and its axiom checker.

Basis indices are 0-based in code.  Violations in a :class:`ValidationReport`
are reported with 1-based indices, matching the a_1, ..., a_n convention of
hand-written structure-constant tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, NamedTuple, Sequence

from ..errors import DimensionError
from ..exactlin import Matrix, Q, Rational, Vector, lincomb, unit_vector, vsub
from ..exactlin.scalar import norm

Tensor = tuple  # c[i][j] is the coordinate vector of [a_i, a_j]


class Violation(NamedTuple):
    axiom: str
    indices: tuple[int, ...]
    residual: object


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of an axiom check: one flag per axiom plus every violation."""

    checks: Mapping[str, bool]
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    @property
    def failing_indices(self) -> tuple[Violation, ...]:
        return self.violations

    @property
    def skew_ok(self) -> bool:
        return self.checks.get("skew", True)

    @property
    def jacobi_ok(self) -> bool:
        return self.checks.get("jacobi", True)

    @property
    def multiplicative_ok(self) -> bool:
        return self.checks.get("multiplicative", True)

    def first(self, axiom: str | None = None) -> Violation | None:
        for v in self.violations:
            if axiom is None or v.axiom == axiom:
                return v
        return None


def make_tensor(c, n: int) -> Tensor:
    if len(c) != n or any(len(row) != n for row in c) or any(len(v) != n for row in c for v in row):
        raise DimensionError(f"structure constants must be a {n}x{n}x{n} array")
    return tuple(tuple(tuple(Q(x) for x in v) for v in row) for row in c)


def zero_tensor(n: int) -> Tensor:
    z = (0,) * n
    return tuple(tuple(z for _ in range(n)) for _ in range(n))


@dataclass(frozen=True)
class HomLieAlgebra:
    """Structure constants ``c[i][j][k]`` of ``[a_i, a_j]`` and twist matrix ``alpha``.

    Column ``i`` of ``alpha`` holds the coordinates of ``alpha(a_i)``.
    Construction does not validate; call :func:`validate` for that.
    """

    dim: int
    c: Tensor
    alpha: Matrix
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.alpha.shape != (self.dim, self.dim):
            raise DimensionError(f"twist must be {self.dim}x{self.dim}, got {self.alpha.shape}")
        if self.labels is not None and len(self.labels) != self.dim:
            raise DimensionError("one label per basis element required")

    @classmethod
    def from_tensor(cls, c, alpha, labels=None) -> "HomLieAlgebra":
        alpha = alpha if isinstance(alpha, Matrix) else Matrix(alpha)
        n = alpha.nrows
        return cls(n, make_tensor(c, n), alpha, tuple(labels) if labels else None)

    @classmethod
    def from_brackets(
        cls,
        dim: int,
        brackets: Mapping[tuple[int, int], Sequence],
        alpha=None,
        labels=None,
    ) -> "HomLieAlgebra":
        """Build from a sparse table ``{(i, j): [a_i, a_j]}``; ``[a_j, a_i]`` is filled in.

        ``alpha`` defaults to the zero map.
        """
        c = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in brackets.items():
            v = [Q(x) for x in v]
            if len(v) != dim:
                raise DimensionError("bracket value has the wrong length")
            c[i][j] = v
            if i != j:
                c[j][i] = [norm(-x) for x in v]
        if alpha is None:
            alpha = Matrix.zeros(dim, dim)
        elif not isinstance(alpha, Matrix):
            alpha = Matrix(alpha, dim)
        return cls(dim, make_tensor(c, dim), alpha, tuple(labels) if labels else None)

    @classmethod
    def abelian(cls, dim: int, alpha=None) -> "HomLieAlgebra":
        if alpha is None:
            alpha = Matrix.identity(dim)
        elif not isinstance(alpha, Matrix):
            alpha = Matrix(alpha, dim)
        return cls(dim, zero_tensor(dim), alpha)

    def with_labels(self, labels) -> "HomLieAlgebra":
        return HomLieAlgebra(self.dim, self.c, self.alpha, tuple(labels))

    # elementwise operations

    @cached_property
    def _nonzero(self) -> tuple[tuple[int, int, Vector], ...]:
        n = self.dim
        return tuple(
            (i, j, self.c[i][j]) for i in range(n) for j in range(n) if any(self.c[i][j])
        )

    @cached_property
    def _alpha_cols(self) -> tuple[Vector, ...]:
        return tuple(self.alpha.columns())

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def bracket(self, x: Sequence[Rational], y: Sequence[Rational]) -> Vector:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise DimensionError("bracket arguments must have length dim")
        return lincomb(((x[i] * y[j], v) for i, j, v in self._nonzero if x[i] and y[j]), n)

    def twist(self, x: Sequence[Rational]) -> Vector:
        return self.alpha @ x

    def twist_basis(self, i: int) -> Vector:
        return self._alpha_cols[i]

    def ad(self, x: Sequence[Rational]) -> Matrix:
        """Matrix of ``y -> [x, y]``."""
        return Matrix.from_columns([self.bracket(x, self.basis_vector(j)) for j in range(self.dim)], self.dim)

    def is_abelian(self) -> bool:
        return not self._nonzero

    def validate(self) -> ValidationReport:
        return validate(self)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"a{i + 1}"

    def __repr__(self) -> str:
        return f"HomLieAlgebra(dim={self.dim}, nonzero_brackets={len(self._nonzero) // 2})"


def bracket(L: HomLieAlgebra, x, y) -> Vector:
    return L.bracket(x, y)


def validate(c, alpha=None) -> ValidationReport:
    """Check skew-symmetry, Hom-Jacobi and multiplicativity in coordinates.

    Hom-Jacobi is evaluated as the quadruple-indexed identity on structure
    constants: for all i, j, k, l,

        sum_p A[p][i] sum_q c_jk^q c_pq^l
      + sum_p A[p][k] sum_q c_ij^q c_pq^l
      + sum_p A[p][j] sum_q c_ki^q c_pq^l = 0.

    Accepts either a :class:`HomLieAlgebra` or a raw ``(c, alpha)`` pair.
    """
    if isinstance(c, HomLieAlgebra):
        n, t, A = c.dim, c.c, c.alpha
    else:
        A = alpha if isinstance(alpha, Matrix) else Matrix(alpha)
        n = A.nrows
        if A.ncols != n:
            raise DimensionError("twist matrix must be square")
        t = make_tensor(c, n)
    violations: list[Violation] = []

    skew_ok = True
    for i in range(n):
        for k in range(n):
            if t[i][i][k]:
                skew_ok = False
                violations.append(Violation("skew", (i + 1, i + 1, k + 1), t[i][i][k]))
        for j in range(i + 1, n):
            for k in range(n):
                s = norm(t[i][j][k] + t[j][i][k])
                if s:
                    skew_ok = False
                    violations.append(Violation("skew", (i + 1, j + 1, k + 1), s))

    # inner[(j, k)][p][l] = sum_q c_jk^q c_pq^l
    inner: dict[tuple[int, int], list[Vector]] = {}
    for j in range(n):
        for k in range(n):
            cjk = t[j][k]
            if not any(cjk):
                continue
            inner[j, k] = [
                lincomb(((cjk[q], t[p][q]) for q in range(n) if cjk[q]), n) for p in range(n)
            ]
    arows = A.rows

    def part(first: int, pair: tuple[int, int]):
        vals = inner.get(pair)
        if vals is None:
            return ()
        return ((arows[p][first], vals[p]) for p in range(n) if arows[p][first])

    jacobi_ok = True
    for i in range(n):
        for j in range(n):
            for k in range(n):
                terms = [*part(i, (j, k)), *part(k, (i, j)), *part(j, (k, i))]
                if not terms:
                    continue
                res = lincomb(terms, n)
                for l, r in enumerate(res):
                    if r:
                        jacobi_ok = False
                        violations.append(Violation("jacobi", (i + 1, j + 1, k + 1, l + 1), r))

    acols = A.columns()
    mult_ok = True
    for i in range(n):
        for j in range(i + 1, n):
            lhs = A @ t[i][j]
            x, y = acols[i], acols[j]
            rhs = lincomb(
                ((x[p] * y[q], t[p][q]) for p in range(n) if x[p] for q in range(n) if y[q]), n
            )
            res = vsub(lhs, rhs)
            for k, r in enumerate(res):
                if r:
                    mult_ok = False
                    violations.append(Violation("multiplicative", (i + 1, j + 1, k + 1), r))

    return ValidationReport(
        {"skew": skew_ok, "jacobi": jacobi_ok, "multiplicative": mult_ok}, tuple(violations)
    )


def is_hom_lie(L: HomLieAlgebra) -> bool:
    """Skew-symmetry and Hom-Jacobi, ignoring multiplicativity."""
    r = validate(L)
    return r.skew_ok and r.jacobi_ok

