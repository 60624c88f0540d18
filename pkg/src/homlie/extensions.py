"""Central and alpha-central extensions, the universal central extension and lifting."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .algebra import (
    HomLieAlgebra,
    Morphism,
    center,
    check_morphism,
    direct_product,
    is_alpha_invariant,
    is_hom_ideal,
    is_perfect,
    product_projections,
    subalgebra,
    validate,
)
from .errors import DimensionError, ExtensionError, LiftError, NotPerfectError
from .exactlin import (
    Matrix,
    QuotientSpace,
    Subspace,
    Vector,
    image,
    is_zero,
    kernel,
    quotient,
    solve,
    unit_vector,
    vadd,
)
from .homology import HomModule, chain_complex, homology, wedge_expand


@dataclass(frozen=True)
class Extension:
    """``0 -> kernel -> total --proj--> base -> 0``."""

    total: HomLieAlgebra
    base: HomLieAlgebra
    proj: Morphism
    kernel: Subspace

    @property
    def alpha_M(self) -> Matrix:
        """The twist of the kernel: ``alpha_K`` restricted, in kernel coordinates."""
        vs = self.kernel.vectors()
        return Matrix.from_columns([self.kernel.coordinates(self.total.twist(v)) for v in vs], len(vs))


def make_extension(pi: Morphism, check: bool = True) -> Extension:
    if check:
        report = check_morphism(pi)
        if not report.ok:
            raise ExtensionError(f"projection is not a morphism: {report.first()}")
    if not pi.is_surjective():
        raise ExtensionError("projection is not surjective")
    ker = pi.kernel()
    if not is_alpha_invariant(pi.source, ker):
        raise ExtensionError("kernel is not invariant under the twist")
    if check and not is_hom_ideal(pi.source, ker):
        raise ExtensionError("kernel is not a Hom-ideal")  # unreachable for a morphism
    return Extension(pi.source, pi.target, pi, ker)


def is_central(e: Extension) -> bool:
    """``[M, K] = 0``."""
    return e.kernel <= center(e.total)


def is_alpha_central(e: Extension) -> bool:
    """``[alpha_M(M), K] = 0``."""
    return e.kernel.image_under(e.total.alpha) <= center(e.total)


def compose(outer: Extension, inner: Extension) -> Extension:
    """The extension ``inner.total -> outer.base`` with projection ``outer.proj o inner.proj``."""
    if inner.base != outer.total:
        raise ExtensionError("inner extension must cover the total algebra of the outer one")
    return make_extension(inner.proj.then(outer.proj), check=False)


def identity_extension(L: HomLieAlgebra) -> Extension:
    return make_extension(Morphism(L, L, Matrix.identity(L.dim)), check=False)


@dataclass(frozen=True)
class Pullback:
    algebra: HomLieAlgebra
    to_source: Morphism  # P -> A
    to_total: Morphism  # P -> K
    extension: Extension | None  # P -> K, when tau is surjective


def pullback(tau: Morphism, pi: Morphism) -> Pullback:
    """``P = {(a, k) : tau(a) = pi(k)}`` inside ``A x K``."""
    if tau.target != pi.target:
        raise ExtensionError("tau and pi must share their target")
    for f in (tau, pi):
        report = check_morphism(f)
        if not report.ok:
            raise ExtensionError(f"input is not a morphism: {report.first()}")
    A, K = tau.source, pi.source
    AK = direct_product(A, K)
    S = kernel(Matrix.hstack(tau.matrix, -pi.matrix))
    P, incl = subalgebra(AK, S)
    pr_a, pr_k = product_projections(A, K)
    to_a = Morphism(P, A, pr_a.matrix @ incl.matrix)
    to_k = Morphism(P, K, pr_k.matrix @ incl.matrix)
    ext = make_extension(to_k, check=False) if to_k.is_surjective() else None
    return Pullback(P, to_a, to_k, ext)


def check_section(e: Extension, sigma: Morphism) -> bool:
    """True iff ``sigma: base -> total`` is a morphism with ``proj o sigma = Id``."""
    if sigma.source != e.base or sigma.target != e.total:
        return False
    if not e.proj.is_surjective():
        return False
    if e.proj.matrix @ sigma.matrix != Matrix.identity(e.base.dim):
        return False
    return check_morphism(sigma).ok


def linear_section(e: Extension, shift: int = 0) -> Matrix:
    """A right inverse of the projection matrix, found by solving column by column.

    ``shift`` adds ``(i + shift)`` times the sum of the kernel basis to column i,
    which gives other sections for uniqueness checks.
    """
    cols = []
    kvec = (0,) * e.total.dim
    for v in e.kernel.vectors():
        kvec = vadd(kvec, v)
    for i in range(e.base.dim):
        s = solve(e.proj.matrix, unit_vector(e.base.dim, i))
        if s is None:
            raise ExtensionError("projection is not surjective")
        if shift:
            s = vadd(s, tuple((i + shift) * x for x in kvec))
        cols.append(s)
    return Matrix.from_columns(cols, e.total.dim)


@dataclass(frozen=True)
class UceData:
    """``uce(L) = Lambda^2 L / I_L`` with the bracket ``[{x1,x2},{y1,y2}] = {[x1,x2],[y1,y2]}``."""

    source: HomLieAlgebra
    I_L: Subspace
    quotient: QuotientSpace = field(repr=False)
    bracket_map: Matrix = field(repr=False)  # Lambda^2 L -> L, {x, y} -> [x, y]
    uce_algebra: HomLieAlgebra
    u_L: Morphism
    alpha_tilde: Matrix
    extension: Extension
    h2_dim: int
    checks: dict[str, bool]

    @property
    def kernel_dim(self) -> int:
        return self.extension.kernel.dim

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _wedge2(L_dim: int, x, y) -> Vector:
    return wedge_expand([x, y], L_dim)


def uce_relations(L: HomLieAlgebra) -> list[Vector]:
    """``-{[x1,x2], a x3} + {[x1,x3], a x2} - {[x2,x3], a x1}`` over basis triples."""
    n = L.dim
    gens = []
    for i, j, k in combinations(range(n), 3):
        c, a = L.c, L.twist_basis
        g = vadd(
            vadd(
                tuple(-t for t in _wedge2(n, c[i][j], a(k))),
                _wedge2(n, c[i][k], a(j)),
            ),
            tuple(-t for t in _wedge2(n, c[j][k], a(i))),
        )
        gens.append(g)
    return gens


def _lambda2(L: HomLieAlgebra) -> tuple[list[tuple[int, int]], Matrix, Matrix]:
    n = L.dim
    pairs = list(combinations(range(n), 2))
    D2 = Matrix.from_columns([L.c[i][j] for i, j in pairs], n)
    A2 = Matrix.from_columns([_wedge2(n, L.twist_basis(i), L.twist_basis(j)) for i, j in pairs], len(pairs))
    return pairs, D2, A2


def uce(L: HomLieAlgebra) -> UceData:
    """Build the universal central extension of a perfect algebra and verify it."""
    if not is_perfect(L):
        raise NotPerfectError("the universal central extension needs a perfect algebra")
    n = L.dim
    pairs, D2, A2 = _lambda2(L)
    N = len(pairs)
    I_L = Subspace.span(uce_relations(L), N)
    Q = quotient(N, I_L)
    reps = Q.section.columns()
    q = Q.repr_dim
    ureps = [D2 @ r for r in reps]
    c = tuple(tuple(Q.project @ _wedge2(n, ureps[r], ureps[s]) for s in range(q)) for r in range(q))
    alpha_tilde = Q.project @ A2 @ Q.section
    U = HomLieAlgebra(q, c, alpha_tilde)
    u_L = Morphism(U, L, D2 @ Q.section)

    checks: dict[str, bool] = {}
    cc = chain_complex(L, max_degree=2)
    checks["I_L = Im d3"] = image(cc.d(3)) == I_L
    # the bracket only sees {x, y} through [x, y], so it is well defined iff
    # I_L is killed by the bracket map; the twist needs Lambda^2 alpha (I_L) in I_L
    checks["bracket well defined"] = all(is_zero(D2 @ v) for v in I_L.vectors())
    checks["twist well defined"] = all(I_L.contains(A2 @ v) for v in I_L.vectors())
    checks["cyclic relation"] = all(is_zero(Q.project @ g) for g in uce_relations(L))
    checks["validate"] = validate(U).ok
    checks["u_L morphism"] = check_morphism(u_L).ok
    checks["u_L surjective"] = u_L.is_surjective()
    ext = make_extension(u_L, check=False)
    checks["central"] = is_central(ext)
    h2 = homology(cc, 2).dim
    checks["ker u_L = H2"] = ext.kernel.dim == h2
    return UceData(L, I_L, Q, D2, U, u_L, alpha_tilde, ext, h2, checks)


def bracket_is_well_defined(u: UceData, samples) -> bool:
    """Check that adding elements of I_L to representatives does not change
    the induced bracket; ``samples`` yields ``(v, w, i)`` with ``v, w`` in
    Lambda^2 L and ``i`` in I_L."""
    n = u.source.dim
    for v, w, i in samples:
        base = u.quotient.project @ _wedge2(n, u.bracket_map @ v, u.bracket_map @ w)
        moved = u.quotient.project @ _wedge2(n, u.bracket_map @ vadd(v, i), u.bracket_map @ w)
        if base != moved:
            return False
    return True


def lift(u: UceData, target: Extension, require_central: bool = True,
         section: Matrix | None = None) -> Morphism:
    """The morphism ``phi: uce(L) -> K`` with ``pi o phi = u_L``.

    ``phi{x1, x2} = [k1, k2]`` where ``k_i`` come from a linear section of
    ``pi``.  Representative independence, the morphism axioms and the
    factorisation are all checked; a failure raises LiftError with a witness.
    """
    L = u.source
    if target.base != L:
        raise ExtensionError("target extension must cover the same algebra")
    if require_central and not is_central(target):
        raise ExtensionError("target extension is not central")
    if not require_central and not is_alpha_central(target):
        raise ExtensionError("target extension is not alpha-central")
    K = target.total
    S = linear_section(target) if section is None else section
    if S.shape != (K.dim, L.dim) or target.proj.matrix @ S != Matrix.identity(L.dim):
        raise ExtensionError("section is not a right inverse of the projection")
    cols = S.columns()
    pairs, _, _ = _lambda2(L)
    psi = Matrix.from_columns([K.bracket(cols[i], cols[j]) for i, j in pairs], K.dim)
    for v in u.I_L.vectors():
        w = psi @ v
        if not is_zero(w):
            raise LiftError("induced map does not vanish on I_L", witness=(v, w))
    phi = Morphism(u.uce_algebra, K, psi @ u.quotient.section)
    report = check_morphism(phi)
    if not report.ok:
        raise LiftError("induced map is not a morphism", witness=report.first())
    if target.proj.matrix @ phi.matrix != u.u_L.matrix:
        raise LiftError("pi o phi differs from u_L", witness=None)
    return phi


def split_over_uce(u: UceData, inner: Extension) -> Morphism:
    """Splitting of a central extension ``F -> uce(L)``.

    Lifts ``uce(L)`` against the composite ``F -> L`` and checks that the
    result is a section of ``inner``.
    """
    if inner.base != u.uce_algebra:
        raise ExtensionError("inner extension must cover uce(L)")
    sigma = lift(u, compose(u.extension, inner), require_central=False)
    if not check_section(inner, sigma):
        raise LiftError("lifted map is not a section", witness=sigma.matrix)
    return sigma


@dataclass(frozen=True)
class Certificate:
    verdict: str  # "universal-central", "not-universal" or "inconclusive"
    perfect: bool
    h1: int
    h2: int


def universality_certificate(e: Extension) -> Certificate:
    """Homological test: a central extension whose total algebra has
    ``H_1 = H_2 = 0`` is universal; one with a non-perfect total algebra is not."""
    if not is_central(e):
        raise ExtensionError("certificate requires a central extension")
    cc = chain_complex(e.total, max_degree=2)
    h1 = homology(cc, 1).dim
    h2 = homology(cc, 2).dim
    perfect = is_perfect(e.total)
    if not perfect:
        verdict = "not-universal"
    elif h1 == 0 and h2 == 0:
        verdict = "universal-central"
    else:
        verdict = "inconclusive"
    return Certificate(verdict, perfect, h1, h2)


def induced_module(e: Extension) -> HomModule:
    """The action of the base on an abelian kernel: ``l . m = [s(l), m]``."""
    K, ker = e.total, e.kernel
    vs = ker.vectors()
    for a in vs:
        for b in vs:
            if not is_zero(K.bracket(a, b)):
                raise ExtensionError("kernel is not abelian")
    S = linear_section(e).columns()
    d = len(vs)
    rho = tuple(
        Matrix.from_columns([ker.coordinates(K.bracket(S[i], v)) for v in vs], d)
        for i in range(e.base.dim)
    )
    return HomModule(d, e.alpha_M, rho)


def quotient_extension(u: UceData, W: Subspace) -> Extension:
    """``uce(L) / W -> L`` for a twist-invariant ``W`` inside ``ker u_L``."""
    U = u.uce_algebra
    if W.ambient_dim != U.dim:
        raise DimensionError("W must live in uce(L)")
    if not W <= u.extension.kernel or not is_alpha_invariant(U, W):
        raise ExtensionError("W must be a twist-invariant subspace of ker u_L")
    from .algebra import quotient_algebra

    Uq, proj = quotient_algebra(U, W)
    # u_L factors through the quotient: u_L = v o proj with v = u_L o section
    Qs = quotient(U.dim, W)
    v = Morphism(Uq, u.source, u.u_L.matrix @ Qs.section)
    return make_extension(v)
