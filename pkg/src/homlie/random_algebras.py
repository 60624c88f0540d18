"""Seeded generators of small valid Hom-Lie algebras, modules and extensions.

Every generator returns validated objects only; candidates that fail the
axioms are discarded.  All randomness flows through a ``random.Random``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .algebra import (
    HomLieAlgebra,
    Morphism,
    bracket_span,
    center,
    change_basis,
    check_morphism,
    derived_algebra,
    direct_product,
    is_alpha_invariant,
    is_perfect,
    product_projections,
    quotient_algebra,
    validate,
)
from .exactlin import Matrix, Subspace, is_zero, kernel
from .exactlin.scalar import norm
from .extensions import Extension, identity_extension, induced_module, make_extension, quotient_extension, uce
from .fixtures import unipotent_pair, perfect_tower, two_dim_representatives, alpha_central_pair, sl2
from .homology import HomModule


def _lie(dim, table) -> HomLieAlgebra:
    """0-based sparse table ``{(i, j): {k: coef}}`` with identity twist."""
    br = {}
    for (i, j), terms in table.items():
        v = [0] * dim
        for k, coef in terms.items():
            v[k] = coef
        br[i, j] = v
    return HomLieAlgebra.from_brackets(dim, br, Matrix.identity(dim))


def lie_library() -> dict[str, HomLieAlgebra]:
    """Small Lie algebras (twist = Id)."""
    libs = {
        "ab1": HomLieAlgebra.abelian(1),
        "ab2": HomLieAlgebra.abelian(2),
        "ab3": HomLieAlgebra.abelian(3),
        "r2": _lie(2, {(0, 1): {0: 1}}),
        "heis3": _lie(3, {(0, 1): {2: 1}}),
        "sl2": sl2(),
        "so3": _lie(3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}}),
        "n4": _lie(4, {(0, 1): {2: 1}, (0, 2): {3: 1}}),
        "r2+r2": _lie(4, {(0, 1): {0: 1}, (2, 3): {2: 1}}),
    }
    for lam in (-1, 0, 1, 2, Fraction(1, 2)):
        libs[f"r3[{lam}]"] = _lie(3, {(2, 0): {0: 1}, (2, 1): {1: lam}})
    libs["heis3+1"] = direct_product(libs["heis3"], libs["ab1"])
    libs["sl2+1"] = direct_product(libs["sl2"], libs["ab1"])
    libs["r2+1"] = direct_product(libs["r2"], libs["ab1"])
    return libs


def random_rational(rng: random.Random, lo: int = -2, hi: int = 2, dens: tuple[int, ...] = (1, 1, 2)) -> int | Fraction:
    return norm(Fraction(rng.randint(lo, hi), rng.choice(dens)))


def random_matrix(rng: random.Random, r: int, c: int, **kw) -> Matrix:
    return Matrix([[random_rational(rng, **kw) for _ in range(c)] for _ in range(r)], c)


def random_invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        P = random_matrix(rng, n, n)
        if P.is_invertible():
            return P


def random_unimodular(rng: random.Random, n: int, steps: int = 6) -> Matrix:
    """Integer matrix with determinant +-1: a product of elementary moves."""
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    rows = [rows[p] for p in perm]
    for _ in range(steps if n > 1 else 0):
        i, j = rng.sample(range(n), 2)
        k = rng.choice([-1, 1, 2])
        rows[i] = [a + k * b for a, b in zip(rows[i], rows[j])]
    if n and rng.random() < 0.5:
        rows[0] = [-a for a in rows[0]]
    return Matrix(rows, n)


def _exp_nilpotent(N: Matrix) -> Matrix:
    n = N.nrows
    out, term, k = Matrix.identity(n), Matrix.identity(n), 1
    while True:
        term = (term @ N).scale(Fraction(1, k))
        if term.is_zero():
            return out
        out = out + term
        k += 1
        if k > n + 1:
            raise ValueError("matrix is not nilpotent")


def _is_endomorphism(lie: HomLieAlgebra, a: Matrix) -> bool:
    return check_morphism(Morphism(lie, lie, a)).checks["bracket"]


def endomorphism_candidates(lie: HomLieAlgebra, rng: random.Random) -> list[Matrix]:
    """Bracket-preserving linear maps of a Lie algebra, found by filtering
    identity, zero, diagonal scalings, projections and exp(ad x)."""
    n = lie.dim
    cands = [Matrix.identity(n), Matrix.zeros(n, n)]
    for _ in range(6):
        cands.append(Matrix.diagonal([rng.choice([0, 1, -1, 2]) for _ in range(n)]))
    for S in combinations(range(n), max(n - 1, 0)):
        cands.append(Matrix.diagonal([1 if i in S else 0 for i in range(n)]))
    for _ in range(4):
        x = [rng.randint(-1, 1) for _ in range(n)]
        ad = lie.ad(x)
        if (ad ** (n + 1)).is_zero():
            cands.append(_exp_nilpotent(ad))
    for _ in range(3):
        cands.append(random_matrix(rng, n, n, lo=-1, hi=1, dens=(1,)))
    out = []
    for a in cands:
        if _is_endomorphism(lie, a) and a not in out:
            out.append(a)
    return out


def yau_family(rng: random.Random) -> Iterator[tuple[str, HomLieAlgebra]]:
    from .algebra import yau_twist

    for name, lie in lie_library().items():
        if lie.dim > 4:
            continue
        for k, a in enumerate(endomorphism_candidates(lie, rng)):
            yield f"yau:{name}:{k}", yau_twist(lie.c, a)


def random_skew(rng: random.Random, n: int, density: float = 0.5) -> HomLieAlgebra:
    """Random skew bracket with zero twist (always a valid multiplicative algebra)."""
    br = {}
    for i, j in combinations(range(n), 2):
        br[i, j] = [rng.randint(-2, 2) if rng.random() < density else 0 for _ in range(n)]
    return HomLieAlgebra.from_brackets(n, br, Matrix.zeros(n, n))


def central_twist_family(rng: random.Random, n: int) -> HomLieAlgebra | None:
    """Random skew bracket with a twist mapping into the center and killing
    the derived algebra; Hom-Jacobi and multiplicativity then hold."""
    L0 = random_skew(rng, n, density=0.3)
    Z = center(L0)
    D = bracket_span(L0, Subspace.full(n), Subspace.full(n))
    if Z.dim == 0 or D.dim == n:
        return None
    # alpha = (Z-basis) x (random functional vanishing on D)
    ann = kernel(Matrix.from_columns(D.vectors(), n).T) if D.dim else Subspace.full(n)
    zs, fs = Z.vectors(), ann.vectors()
    A = Matrix.zeros(n, n)
    for z in zs:
        for f in fs:
            s = rng.randint(-2, 2)
            if s:
                A = A + Matrix.from_columns([z], n) @ Matrix([list(f)], n).scale(s)
    return HomLieAlgebra(n, L0.c, A)


def random_change(rng: random.Random, L: HomLieAlgebra, integral: bool = False) -> HomLieAlgebra:
    P = random_unimodular(rng, L.dim) if integral else random_invertible(rng, L.dim)
    return change_basis(L, P)[0]


def fixture_algebras() -> dict[str, HomLieAlgebra]:
    L, K, F, _, _ = perfect_tower()
    L2, K2, _ = alpha_central_pair()
    out = {"tower-L": L, "tower-K": K, "tower-F": F, "acentral-L": L2, "acentral-K": K2,
           "unipotent-L": unipotent_pair()[0], "sl2": sl2()}
    for k, v in two_dim_representatives().items():
        out[f"class2-{k}"] = v
    return out


def algebra_corpus(seed: int = 0, size: int = 120, max_dim: int = 4) -> list[tuple[str, HomLieAlgebra]]:
    """At least ``size`` validated algebras of dimension ``<= max_dim``."""
    rng = random.Random(seed)
    out: list[tuple[str, HomLieAlgebra]] = []
    yau = [(n, L) for n, L in yau_family(rng) if L.dim <= max_dim]
    rng.shuffle(yau)
    out.extend(yau[: size // 2])
    i = 0
    while len(out) < size:
        i += 1
        n = rng.randint(1, max_dim)
        kind = i % 3
        if kind == 0:
            L = random_skew(rng, n)
            name = f"skew:{i}"
        elif kind == 1:
            L = central_twist_family(rng, n)
            name = f"central-twist:{i}"
            if L is None:
                continue
        else:
            (n1, A), (n2, B) = rng.choice(yau), rng.choice(out)
            if A.dim + B.dim > max_dim:
                continue
            L = direct_product(A, B)
            name = f"prod:{n1}x{n2}"
        out.append((name, L))
    # most basis changes are unimodular so the corpus stays mostly integral
    out = [(n, random_change(rng, L, integral=k % 4 != 0)) for k, (n, L) in enumerate(out)]
    for n, L in out:
        if not validate(L).ok:
            raise AssertionError(f"generator produced an invalid algebra: {n}")
    return out


def one_dim_modules(L: HomLieAlgebra, rng: random.Random) -> list[HomModule]:
    """1-dimensional modules ``x . m = lambda(x) m``.

    ``lambda`` must kill ``[L, L]`` and satisfy ``lambda o alpha = s lambda``;
    ``alpha_M = mu`` is free when ``s = 1`` and must vanish otherwise.
    """
    n = L.dim
    D = bracket_span(L, Subspace.full(n), Subspace.full(n))
    rows = [list(v) for v in D.vectors()]
    out = []
    for s in (1, 0, -1, 2):
        cons = rows + [list(r) for r in (L.alpha.T - Matrix.identity(n).scale(s)).rows]
        sol = kernel(Matrix(cons, n)) if cons else Subspace.full(n)
        for lam in sol.vectors()[:1]:
            mu = rng.choice([1, -1, 2, Fraction(1, 2)]) if s == 1 else 0
            rho = tuple(Matrix([[lam[i]]]) for i in range(n))
            out.append(HomModule(1, Matrix([[mu]]), rho))
    return out


def module_corpus(L: HomLieAlgebra, rng: random.Random) -> list[HomModule]:
    """Validated modules of dimension <= 2 for ``L``."""
    mods = [HomModule.trivial(L), HomModule.trivial(L, 2, random_matrix(rng, 2, 2))]
    mods.extend(one_dim_modules(L, rng))
    if L.dim <= 2:
        mods.append(HomModule.adjoint(L))
    valid = [M for M in mods if M.check(L).ok]
    if len(valid) != len(mods):
        raise AssertionError("module generator produced an invalid action")
    return valid


def abelian_sequence_modules(algebras, max_base_dim: int = 4) -> list[tuple[HomLieAlgebra, HomModule, Extension]]:
    """Modules induced by abelian sequences ``[K, K] -> K -> K/[K, K]``
    whenever the derived algebra is a nonzero abelian ideal of dimension <= 2."""
    out = []
    for K in algebras:
        D = derived_algebra(K)
        if not 1 <= D.dim <= 2 or D.dim == K.dim or K.dim - D.dim > max_base_dim:
            continue
        vs = D.vectors()
        if any(not is_zero(K.bracket(a, b)) for a in vs for b in vs):
            continue
        Lq, proj = quotient_algebra(K, D)
        e = make_extension(proj)
        M = induced_module(e)
        if not M.check(Lq).ok:
            raise AssertionError("induced action fails the axioms")
        out.append((Lq, M, e))
    return out


def perfect_corpus(seed: int = 0, count: int = 12) -> list[tuple[str, HomLieAlgebra]]:
    """Perfect algebras: built-in fixtures, twisted sl2/so3 and random zero-twist brackets."""
    rng = random.Random(seed)
    out = [(n, L) for n, L in fixture_algebras().items() if L.dim and is_perfect(L)]
    from .algebra import yau_twist

    for name, lie in (("sl2", sl2()), ("so3", lie_library()["so3"])):
        for k, a in enumerate(endomorphism_candidates(lie, rng)):
            T = yau_twist(lie.c, a)
            if is_perfect(T):
                out.append((f"yau:{name}:{k}", random_change(rng, T)))
    # larger perfect algebras, where I_L is nonzero
    for name, lie, alphas in _wide_perfect():
        for k, a in enumerate(alphas):
            T = yau_twist(lie.c, a)
            if is_perfect(T):
                out.append((f"yau:{name}:{k}", random_change(rng, T, integral=True)))
    tries = 0
    while len(out) < count + 4 and tries < 200:
        tries += 1
        L = random_skew(rng, rng.choice([3, 4]), density=0.6)
        if is_perfect(L):
            out.append((f"skew:{tries}", random_change(rng, L)))
    return out


def _wide_perfect():
    """sl2 + sl2 and sl2 acting on its 2-dim representation, with some twists."""
    s = sl2()
    ss = direct_product(s, s)
    swap = Matrix.from_columns([[0] * 3 + list(c) for c in Matrix.identity(3).columns()]
                               + [list(c) + [0] * 3 for c in Matrix.identity(3).columns()], 6)
    # e, f, h, v1, v2 with e.v2 = v1, f.v1 = v2, h.v1 = v1, h.v2 = -v2
    sv = _lie(5, {(2, 0): {0: 2}, (2, 1): {1: -2}, (0, 1): {2: 1},
                  (0, 4): {3: 1}, (1, 3): {4: 1}, (2, 3): {3: 1}, (2, 4): {4: -1}})
    scale_v = Matrix.diagonal([1, 1, 1, 2, 2])
    return [("sl2+sl2", ss, [Matrix.identity(6), swap]), ("sl2|V", sv, [Matrix.identity(5), scale_v])]


def central_extensions(L: HomLieAlgebra, rng: random.Random, u=None) -> list[tuple[str, Extension]]:
    """Central extensions of a perfect ``L``: the uce, quotients of it, the
    identity and ``L x A`` for an abelian ``A`` with a random twist."""
    u = uce(L) if u is None else u
    out = [("uce", u.extension), ("identity", identity_extension(L))]
    U, ker = u.uce_algebra, u.extension.kernel
    if ker.dim:
        v = ker.vectors()[rng.randrange(ker.dim)]
        W = Subspace.span([v], U.dim)
        while not is_alpha_invariant(U, W):
            W = W + W.image_under(U.alpha)
        if W.dim < U.dim:
            out.append(("uce/W", quotient_extension(u, W)))
    A = HomLieAlgebra.abelian(rng.choice([1, 2]), None)
    A = HomLieAlgebra(A.dim, A.c, random_matrix(rng, A.dim, A.dim))
    P = direct_product(L, A)
    pr = product_projections(L, A)[0]
    out.append(("product", make_extension(Morphism(P, L, pr.matrix))))
    return out
