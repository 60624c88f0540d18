"""Subspaces attached to a Hom-Lie algebra and the algebras built from them."""

from __future__ import annotations

from typing import Iterable, Sequence

from ..errors import DimensionError, NotIdealError
from ..exactlin import Matrix, Rational, Subspace, kernel, quotient, unit_vector
from .core import HomLieAlgebra
from .morphism import Morphism


def _check_ambient(L: HomLieAlgebra, S: Subspace) -> None:
    if S.ambient_dim != L.dim:
        raise DimensionError(f"subspace of Q^{S.ambient_dim} used with a {L.dim}-dimensional algebra")


def full(L: HomLieAlgebra) -> Subspace:
    return Subspace.full(L.dim)


def center(L: HomLieAlgebra) -> Subspace:
    """``{x : [x, a_j] = 0 for every basis element a_j}``."""
    n = L.dim
    if n == 0:
        return Subspace.zero(0)
    # row block j holds x -> [x, a_j]
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append(tuple(L.c[i][j][k] for i in range(n)))
    return kernel(Matrix(rows, n))


def is_alpha_invariant(L: HomLieAlgebra, S: Subspace) -> bool:
    _check_ambient(L, S)
    return all(S.contains(L.twist(v)) for v in S.vectors())


def is_subalgebra(L: HomLieAlgebra, S: Subspace) -> bool:
    _check_ambient(L, S)
    vs = S.vectors()
    if not is_alpha_invariant(L, S):
        return False
    return all(S.contains(L.bracket(vs[i], vs[j])) for i in range(len(vs)) for j in range(i + 1, len(vs)))


def is_hom_ideal(L: HomLieAlgebra, S: Subspace) -> bool:
    _check_ambient(L, S)
    if not is_alpha_invariant(L, S):
        return False
    return all(
        S.contains(L.bracket(v, L.basis_vector(j))) for v in S.vectors() for j in range(L.dim)
    )


def alpha_closure(L: HomLieAlgebra, S: Subspace) -> Subspace:
    """Smallest alpha-invariant subspace containing ``S``."""
    _check_ambient(L, S)
    while True:
        T = S + S.image_under(L.alpha)
        if T.dim == S.dim:
            return S
        S = T


def ideal_closure(L: HomLieAlgebra, generators: Iterable[Sequence[Rational]]) -> Subspace:
    """Hom-ideal generated by ``generators``: closed under alpha and brackets with L."""
    S = Subspace.span(generators, L.dim)
    basis = [L.basis_vector(j) for j in range(L.dim)]
    while True:
        vs = S.vectors()
        new = vs + [L.twist(v) for v in vs] + [L.bracket(v, b) for v in vs for b in basis]
        T = Subspace.span(new, L.dim)
        if T.dim == S.dim:
            return S
        S = T


def bracket_span(L: HomLieAlgebra, H: Subspace, K: Subspace) -> Subspace:
    """Span of ``[h, k]`` over basis vectors h of H and k of K, without closure."""
    return Subspace.span((L.bracket(h, k) for h in H.vectors() for k in K.vectors()), L.dim)


def commutator(L: HomLieAlgebra, H: Subspace | None = None, K: Subspace | None = None,
               check: bool = True) -> Subspace:
    """``[H, K]``: the bracket span, closed under alpha.

    ``H`` and ``K`` default to the whole algebra.  For a multiplicative
    algebra and alpha-invariant inputs the closure step adds nothing.
    """
    H = full(L) if H is None else H
    K = full(L) if K is None else K
    _check_ambient(L, H)
    _check_ambient(L, K)
    if check:
        for name, S in (("H", H), ("K", K)):
            if not is_hom_ideal(L, S):
                raise NotIdealError(f"{name} is not a Hom-ideal")
    return alpha_closure(L, bracket_span(L, H, K))


def derived_algebra(L: HomLieAlgebra) -> Subspace:
    return commutator(L, check=False)


def is_perfect(L: HomLieAlgebra) -> bool:
    return derived_algebra(L).dim == L.dim


def subalgebra(L: HomLieAlgebra, S: Subspace) -> tuple[HomLieAlgebra, Morphism]:
    """``S`` as an algebra in its canonical basis, with the inclusion into ``L``."""
    if not is_subalgebra(L, S):
        raise NotIdealError("subspace is not a Hom-subalgebra")
    vs = S.vectors()
    d = len(vs)
    c = tuple(tuple(S.coordinates(L.bracket(vs[i], vs[j])) for j in range(d)) for i in range(d))
    alpha = Matrix.from_columns([S.coordinates(L.twist(v)) for v in vs], d)
    sub = HomLieAlgebra(d, c, alpha)
    return sub, Morphism(sub, L, S.basis)


def quotient_algebra(L: HomLieAlgebra, I: Subspace) -> tuple[HomLieAlgebra, Morphism]:
    """``L / I`` on the free-coordinate representatives, with the projection."""
    _check_ambient(L, I)
    if not is_hom_ideal(L, I):
        raise NotIdealError("cannot form a quotient by a subspace that is not a Hom-ideal")
    return _quotient(L, I)


def _quotient(L: HomLieAlgebra, I: Subspace) -> tuple[HomLieAlgebra, Morphism]:
    Qs = quotient(L.dim, I)
    reps = Qs.section.columns()
    q = Qs.repr_dim
    c = tuple(tuple(Qs.project @ L.bracket(reps[i], reps[j]) for j in range(q)) for i in range(q))
    alpha = Qs.project @ L.alpha @ Qs.section
    Lq = HomLieAlgebra(q, c, alpha)
    return Lq, Morphism(L, Lq, Qs.project)


def multiplicative_quotient(L: HomLieAlgebra) -> tuple[HomLieAlgebra, Morphism]:
    """Largest multiplicative quotient: divide out the Hom-ideal generated by
    ``alpha[x, y] - [alpha x, alpha y]`` over basis pairs."""
    n = L.dim
    gens = []
    for i in range(n):
        for j in range(i + 1, n):
            a = L.twist(L.c[i][j])
            b = L.bracket(L.twist_basis(i), L.twist_basis(j))
            gens.append(tuple(x - y for x, y in zip(a, b)))
    I = ideal_closure(L, gens)
    return _quotient(L, I)


def direct_product(L1: HomLieAlgebra, L2: HomLieAlgebra) -> HomLieAlgebra:
    """``L1 x L2`` with block-diagonal brackets and twist; L1 coordinates first."""
    n1, n2 = L1.dim, L2.dim
    n = n1 + n2
    z = (0,) * n
    c = []
    for i in range(n):
        row = []
        for j in range(n):
            if i < n1 and j < n1:
                row.append(L1.c[i][j] + (0,) * n2)
            elif i >= n1 and j >= n1:
                row.append((0,) * n1 + L2.c[i - n1][j - n1])
            else:
                row.append(z)
        c.append(tuple(row))
    labels = None
    if L1.labels or L2.labels:
        labels = tuple(L1.label(i) for i in range(n1)) + tuple(L2.label(i) for i in range(n2))
    return HomLieAlgebra(n, tuple(c), Matrix.block_diag(L1.alpha, L2.alpha), labels)


def product_projections(L1: HomLieAlgebra, L2: HomLieAlgebra) -> tuple[Morphism, Morphism]:
    P = direct_product(L1, L2)
    n1, n2 = L1.dim, L2.dim
    pr1 = Matrix.hstack(Matrix.identity(n1), Matrix.zeros(n1, n2))
    pr2 = Matrix.hstack(Matrix.zeros(n2, n1), Matrix.identity(n2))
    return Morphism(P, L1, pr1), Morphism(P, L2, pr2)


def product_injections(L1: HomLieAlgebra, L2: HomLieAlgebra) -> tuple[Morphism, Morphism]:
    P = direct_product(L1, L2)
    n1, n2 = L1.dim, L2.dim
    in1 = Matrix.vstack(Matrix.identity(n1), Matrix.zeros(n2, n1))
    in2 = Matrix.vstack(Matrix.zeros(n1, n2), Matrix.identity(n2))
    return Morphism(L1, P, in1), Morphism(L2, P, in2)


def span_of_basis(L: HomLieAlgebra, indices: Iterable[int]) -> Subspace:
    """Span of the given basis elements (0-based)."""
    return Subspace.span((unit_vector(L.dim, i) for i in indices), L.dim)
