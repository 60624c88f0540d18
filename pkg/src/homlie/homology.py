"""The alpha-twisted Chevalley-Eilenberg complex ``C_n = M (x) Lambda^n L``.

Basis of ``C_n``: pairs ``(a, T)`` with ``a`` a module basis index and ``T`` a
strictly increasing n-tuple of algebra basis indices; the module index varies
slowest and tuples are in lexicographic order, so ``(a, T)`` sits at position
``a * binom(dim L, n) + rank(T)``.

Modules are stored with a left action ``x . m`` satisfying the Hom-action
axioms.  The boundary is written with the right action, which is taken to be
``m . x = -(x . m)``; with that convention ``d o d = 0`` for every module
satisfying the axioms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Sequence

from .algebra import HomLieAlgebra, ValidationReport, bracket_span, check_action
from .algebra.action import act, adjoint_action, as_action
from .errors import DimensionError, HomLieError
from .exactlin import Matrix, Rational, Subspace, Vector, image, kernel, rank
from .exactlin.scalar import norm


@dataclass(frozen=True)
class HomModule:
    """Coefficients ``(M, alpha_M)`` with left action ``rho[i] = (m -> a_i . m)``."""

    dim: int
    alpha_M: Matrix
    rho: tuple[Matrix, ...]

    @classmethod
    def create(cls, L: HomLieAlgebra, dim: int, alpha, rho) -> "HomModule":
        alpha = alpha if isinstance(alpha, Matrix) else Matrix(alpha, dim)
        return cls(dim, alpha, as_action(rho, L.dim, dim))

    @classmethod
    def trivial(cls, L: HomLieAlgebra, dim: int = 1, alpha=None) -> "HomModule":
        """Trivial action; ``alpha`` defaults to the identity (the ground field K)."""
        if alpha is None:
            alpha = Matrix.identity(dim)
        elif not isinstance(alpha, Matrix):
            alpha = Matrix(alpha, dim)
        return cls(dim, alpha, tuple(Matrix.zeros(dim, dim) for _ in range(L.dim)))

    @classmethod
    def adjoint(cls, L: HomLieAlgebra) -> "HomModule":
        return cls(L.dim, L.alpha, adjoint_action(L))

    def check(self, L: HomLieAlgebra) -> ValidationReport:
        return check_action(L, self.dim, self.alpha_M, self.rho)

    def is_trivial(self) -> bool:
        return all(r.is_zero() for r in self.rho)

    def left(self, x: Sequence[Rational]) -> Matrix:
        return act(self.rho, x, self.dim)


class WedgeBasis:
    """Strictly increasing ``degree``-tuples from ``range(L_dim)`` in lex order."""

    def __init__(self, L_dim: int, degree: int):
        self.L_dim = L_dim
        self.degree = degree
        self.tuples = tuple(combinations(range(L_dim), degree)) if degree >= 0 else ()
        self.index = {t: k for k, t in enumerate(self.tuples)}

    def __len__(self) -> int:
        return len(self.tuples)


def _perm_sign(t: Sequence[int]) -> int:
    s = 1
    for i in range(len(t)):
        for j in range(i + 1, len(t)):
            if t[i] > t[j]:
                s = -s
    return s


def wedge_terms(vectors: Sequence[Sequence[Rational]]) -> dict[tuple[int, ...], Rational]:
    """Expand ``v_1 ^ ... ^ v_k`` as ``{sorted index tuple: coefficient}``."""
    partial: dict[tuple[int, ...], Rational] = {(): 1}
    for v in vectors:
        nz = [(i, a) for i, a in enumerate(v) if a]
        if not nz:
            return {}
        nxt: dict[tuple[int, ...], Rational] = {}
        for t, coef in partial.items():
            for i, a in nz:
                if i in t:
                    continue
                key = t + (i,)
                nxt[key] = nxt.get(key, 0) + coef * a
        partial = nxt
        if not partial:
            return {}
    out: dict[tuple[int, ...], Rational] = {}
    for t, coef in partial.items():
        if not coef:
            continue
        key = tuple(sorted(t))
        out[key] = out.get(key, 0) + _perm_sign(t) * coef
    return {k: norm(v) for k, v in out.items() if v}


def wedge_expand(vectors: Sequence[Sequence[Rational]], L_dim: int | None = None) -> Vector:
    """Coordinates of ``v_1 ^ ... ^ v_k`` in the lex-ordered wedge basis."""
    if L_dim is None:
        if not vectors:
            raise DimensionError("L_dim is required for the empty wedge")
        L_dim = len(vectors[0])
    if any(len(v) != L_dim for v in vectors):
        raise DimensionError("wedge factors must all have length L_dim")
    wb = WedgeBasis(L_dim, len(vectors))
    out = [0] * len(wb)
    for t, coef in wedge_terms(vectors).items():
        out[wb.index[t]] = coef
    return tuple(out)


@dataclass(frozen=True)
class ChainComplex:
    """``C_*^alpha(L, M)`` with its boundaries ``d_1 .. d_{max_degree + 1}``."""

    L: HomLieAlgebra
    M: HomModule
    max_degree: int
    boundaries: tuple[Matrix, ...] = field(repr=False)

    def chain_dim(self, n: int) -> int:
        if n < 0:
            return 0
        return self.M.dim * comb(self.L.dim, n)

    def wedge_basis(self, n: int) -> WedgeBasis:
        return _wedge_basis(self.L.dim, n)

    def d(self, n: int) -> Matrix:
        """``d_n: C_n -> C_{n-1}``; ``d_0`` is the zero map to the zero space."""
        if n == 0:
            return Matrix.zeros(0, self.M.dim)
        if not 1 <= n <= self.max_degree + 1:
            raise DimensionError(f"boundary degree {n} outside 0..{self.max_degree + 1}")
        return self.boundaries[n - 1]

    @cached_property
    def _ops(self) -> "_Operators":
        return _Operators(self.L, self.M)


_WB_CACHE: dict[tuple[int, int], WedgeBasis] = {}


def _wedge_basis(L_dim: int, n: int) -> WedgeBasis:
    key = (L_dim, n)
    wb = _WB_CACHE.get(key)
    if wb is None:
        wb = _WB_CACHE[key] = WedgeBasis(L_dim, n)
    return wb


class _Operators:
    """Matrix builders for d_n, theta_n, i_n on one (L, M) pair."""

    def __init__(self, L: HomLieAlgebra, M: HomModule):
        self.L = L
        self.M = M
        self.acols = [L.twist_basis(i) for i in range(L.dim)]
        self.mcols = M.alpha_M.columns()
        # right action m . a_i = -(a_i . m), columns indexed by module basis
        self.right = [(-r).columns() for r in M.rho]

    def _assemble(self, n_out: int, columns_terms) -> Matrix:
        """Build a matrix into C_{n_out} from per-column lists of
        ``(sign, module_vector, wedge_terms)``."""
        wb = _wedge_basis(self.L.dim, n_out)
        w = len(wb)
        rows = self.M.dim * w
        cols = []
        for terms in columns_terms:
            col = [0] * rows
            for sign, u, wt in terms:
                if not wt:
                    continue
                for b, ub in enumerate(u):
                    if not ub:
                        continue
                    base = b * w
                    f = sign * ub
                    for t, coef in wt.items():
                        col[base + wb.index[t]] += f * coef
            cols.append(tuple(norm(x) for x in col))
        return Matrix.from_columns(cols, rows)

    def _basis(self, n: int):
        wb = _wedge_basis(self.L.dim, n)
        for a in range(self.M.dim):
            for T in wb.tuples:
                yield a, T

    def boundary(self, n: int) -> Matrix:
        L, ac = self.L, self.acols
        columns = []
        for a, T in self._basis(n):
            terms = []
            for i in range(n):
                rest = [ac[T[k]] for k in range(n) if k != i]
                # sign (-1)^(i+1) with 1-based i
                terms.append((1 if i % 2 == 0 else -1, self.right[T[i]][a], wedge_terms(rest)))
            for i in range(n):
                for j in range(i + 1, n):
                    rest = [ac[T[k]] for k in range(n) if k != i and k != j]
                    wt = wedge_terms([L.c[T[i]][T[j]], *rest])
                    terms.append((1 if (i + j) % 2 == 0 else -1, self.mcols[a], wt))
            columns.append(terms)
        return self._assemble(n - 1, columns)

    def theta(self, n: int, y: Sequence[Rational]) -> Matrix:
        L, ac = self.L, self.acols
        left_y = self.M.left(y).columns()  # -(m . y) = y . m
        columns = []
        for a, T in self._basis(n):
            terms = [(1, left_y[a], wedge_terms([ac[t] for t in T]))]
            for i in range(n):
                rest = [ac[T[k]] for k in range(n) if k != i]
                bxy = L.bracket(L.basis_vector(T[i]), y)
                # (-1)^i with 1-based i
                terms.append((-1 if i % 2 == 0 else 1, self.mcols[a], wedge_terms([bxy, *rest])))
            columns.append(terms)
        return self._assemble(n, columns)

    def theta_basis(self, n: int) -> list[Matrix]:
        cache = self.__dict__.setdefault("_theta_cache", {})
        if n not in cache:
            cache[n] = [self.theta(n, self.L.basis_vector(p)) for p in range(self.L.dim)]
        return cache[n]

    def theta_linear(self, n: int, y: Sequence[Rational]) -> Matrix:
        """``theta_n(y)`` assembled from the basis matrices by linearity in y."""
        mats = self.theta_basis(n)
        size = self.M.dim * comb(self.L.dim, n)
        rows = [[0] * size for _ in range(size)]
        for yp, m in zip(y, mats):
            if not yp:
                continue
            for r, row in zip(rows, m.rows):
                for j, a in enumerate(row):
                    if a:
                        r[j] += yp * a
        return Matrix(rows, size)

    def iota(self, n: int, y: Sequence[Rational]) -> Matrix:
        sign = -1 if n % 2 else 1
        ident = Matrix.identity(self.M.dim).columns()
        columns = []
        for a, T in self._basis(n):
            vecs = [self.L.basis_vector(t) for t in T] + [tuple(y)]
            columns.append([(sign, ident[a], wedge_terms(vecs))])
        return self._assemble(n + 1, columns)

    def twist(self, n: int) -> Matrix:
        ac = self.acols
        columns = [[(1, self.mcols[a], wedge_terms([ac[t] for t in T]))] for a, T in self._basis(n)]
        return self._assemble(n, columns)


def chain_complex(L: HomLieAlgebra, M: HomModule | None = None, max_degree: int | None = None,
                  check: bool = True) -> ChainComplex:
    """Build the complex; ``M`` defaults to the trivial module K, ``max_degree`` to dim L."""
    if M is None:
        M = HomModule.trivial(L)
    if len(M.rho) != L.dim:
        raise DimensionError("module action does not match the algebra dimension")
    if check:
        report = M.check(L)
        if not report.ok:
            raise HomLieError(f"module fails the action axioms: {report.first()}")
    if max_degree is None:
        max_degree = L.dim
    ops = _Operators(L, M)
    ds = tuple(ops.boundary(n) for n in range(1, max_degree + 2))
    cc = ChainComplex(L, M, max_degree, ds)
    cc.__dict__["_ops"] = ops
    return cc


def _check_degree(cc: ChainComplex, n: int, lo: int = 0) -> None:
    if not lo <= n <= cc.max_degree:
        raise DimensionError(f"degree {n} outside {lo}..{cc.max_degree}")


def boundary(cc: ChainComplex, n: int) -> Matrix:
    if not 1 <= n <= cc.max_degree:
        raise DimensionError(f"degree {n} outside 1..{cc.max_degree}")
    return cc.d(n)


def theta(cc: ChainComplex, n: int, y: Sequence[Rational]) -> Matrix:
    """Matrix of ``theta_n(y): C_n -> C_n``."""
    _check_degree(cc, n)
    return cc._ops.theta(n, y)


def iota(cc: ChainComplex, n: int, y: Sequence[Rational]) -> Matrix:
    """Matrix of the operator written ``i_n(alpha(y))``: ``C_n -> C_{n+1}``,
    ``m (x) x_1 ^ .. ^ x_n -> (-1)^n m (x) x_1 ^ .. ^ x_n ^ y``.

    Note that the vector appended is ``y`` itself.
    """
    _check_degree(cc, n)
    return cc._ops.iota(n, y)


def twist_map(cc: ChainComplex, n: int) -> Matrix:
    """``alpha_M (x) alpha^(^n)`` on ``C_n``."""
    return cc._ops.twist(n)


@dataclass(frozen=True)
class CartanReport:
    degree: int
    checks: dict[str, bool | None]  # None: identity not stated at this degree
    witnesses: dict[str, tuple] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v is not False for v in self.checks.values())


def verify_cartan(cc: ChainComplex, n: int) -> CartanReport:
    """Check the five generalized Cartan identities at degree ``n`` as exact
    matrix equations, for every pair of basis vectors x, y.

    a) d_{n+1} i_n(a y) + i_{n-1}(a^2 y) d_n = -theta_n(y)                 (n >= 1)
    b) theta_n(a x) theta_n(y) - theta_n(a y) theta_n(x)
           = theta_n([x, y]) (alpha_M (x) alpha^n)                           (n >= 0)
    c) theta_n(x) i_{n-1}(a y) - i_{n-1}(a^2 y) theta_{n-1}(x)
           = i_{n-1}(a [x, y]) (alpha_M (x) alpha^(n-1))                     (n >= 1)
    d) theta_{n-1}(a y) d_n = d_n theta_n(y)                                (n >= 1)
    e) d_n d_{n+1} = 0                                                      (n >= 1)

    ``i_k(a z)`` appends ``z``, so ``i_{n-1}(a^2 y)`` appends ``alpha(y)``.
    """
    if not 0 <= n <= cc.max_degree:
        raise DimensionError(f"degree {n} outside 0..{cc.max_degree}")
    L, ops = cc.L, cc._ops
    basis = [L.basis_vector(i) for i in range(L.dim)]
    th: dict[tuple[int, Vector], Matrix] = {}
    io: dict[tuple[int, Vector], Matrix] = {}

    def TH(k, v):
        key = (k, tuple(v))
        if key not in th:
            th[key] = ops.theta_linear(k, v)
        return th[key]

    def IO(k, v):
        key = (k, tuple(v))
        if key not in io:
            io[key] = ops.iota(k, v)
        return io[key]

    def d(k):
        return cc.d(k) if k <= cc.max_degree + 1 else ops.boundary(k)

    checks: dict[str, bool | None] = {k: None for k in "abcde"}
    witnesses: dict[str, tuple] = {}

    def record(name, ok, wit):
        if checks[name] is None:
            checks[name] = True
        if not ok and checks[name]:
            checks[name] = False
            witnesses[name] = wit

    if n >= 1:
        dn, dn1 = d(n), d(n + 1)
        record("e", (dn @ dn1).is_zero(), (n,))
        for yi, y in enumerate(basis):
            ay = L.twist(y)
            lhs = dn1 @ IO(n, y) + IO(n - 1, ay) @ dn
            record("a", lhs == -TH(n, y), (yi + 1,))
            record("d", TH(n - 1, ay) @ dn == dn @ TH(n, y), (yi + 1,))
    tw_n = ops.twist(n)
    tw_n1 = ops.twist(n - 1) if n >= 1 else None
    for xi, x in enumerate(basis):
        ax = L.twist(x)
        for yi, y in enumerate(basis):
            ay = L.twist(y)
            bxy = L.bracket(x, y)
            lhs = TH(n, ax) @ TH(n, y) - TH(n, ay) @ TH(n, x)
            record("b", lhs == TH(n, bxy) @ tw_n, (xi + 1, yi + 1))
            if n >= 1:
                lhs = TH(n, x) @ IO(n - 1, y) - IO(n - 1, ay) @ TH(n - 1, x)
                record("c", lhs == IO(n - 1, bxy) @ tw_n1, (xi + 1, yi + 1))
    return CartanReport(n, checks, witnesses)


@dataclass(frozen=True)
class HomologyResult:
    degree: int
    dim: int
    cycles_dim: int
    boundaries_dim: int
    representatives: tuple[Vector, ...]


def homology(cc: ChainComplex, n: int) -> HomologyResult:
    """``H_n = ker d_n / im d_{n+1}`` with representative cycles."""
    _check_degree(cc, n)
    Z = kernel(cc.d(n))
    B = image(cc.d(n + 1))
    reps = []
    span = B
    for z in Z.vectors():
        if not span.contains(z):
            reps.append(z)
            span = Subspace.span(span.vectors() + [z], span.ambient_dim)
    return HomologyResult(n, Z.dim - B.dim, Z.dim, B.dim, tuple(reps))


def homology_dims(cc: ChainComplex) -> list[int]:
    return [homology(cc, n).dim for n in range(cc.max_degree + 1)]


def h0_closed_form(cc: ChainComplex) -> int:
    """``dim M / M_L`` with ``M_L`` spanned by all ``x . m``."""
    M = cc.M
    if M.dim == 0:
        return 0
    if not M.rho:
        return M.dim
    return M.dim - rank(Matrix.hstack(*M.rho))


def h1_closed_form_trivial(cc: ChainComplex) -> int:
    """``dim (M (x) L) / (alpha_M(M) (x) [L, L])`` for a trivial action."""
    if not cc.M.is_trivial():
        raise HomLieError("closed form for H_1 requires a trivial action")
    derived = bracket_span(cc.L, Subspace.full(cc.L.dim), Subspace.full(cc.L.dim))
    return cc.M.dim * cc.L.dim - rank(cc.M.alpha_M) * derived.dim


def euler_audit(cc: ChainComplex) -> dict[str, int]:
    """Alternating sums of chain and homology dimensions over 0..max_degree.

    The difference is ``(-1)^max_degree * rank d_{max_degree + 1}``; this
    reports all three quantities so a caller can verify rank-nullity.
    """
    top = cc.max_degree
    chi_c = sum((-1) ** k * cc.chain_dim(k) for k in range(top + 1))
    chi_h = sum((-1) ** k * homology(cc, k).dim for k in range(top + 1))
    return {"chain": chi_c, "homology": chi_h, "top_boundary_rank": rank(cc.d(top + 1))}
