"""Built-in algebras, modules and morphisms.

Tables are written with 1-based basis indices exactly as they are usually
printed; ``_alg`` converts them.  Brackets not listed are zero.
"""

from __future__ import annotations

from .algebra import HomLieAlgebra, Morphism
from .exactlin import Matrix


def _alg(dim, table, alpha=None, labels=None) -> HomLieAlgebra:
    brackets = {}
    for (i, j), terms in table.items():
        v = [0] * dim
        for k, coef in terms.items():
            v[k - 1] = coef
        brackets[i - 1, j - 1] = v
    return HomLieAlgebra.from_brackets(dim, brackets, alpha, labels)


def _images(src_dim, tgt_dim, images) -> Matrix:
    """Matrix of the linear map sending basis element i to ``images[i]`` ({k: coef})."""
    cols = []
    for i in range(1, src_dim + 1):
        v = [0] * tgt_dim
        for k, coef in images.get(i, {}).items():
            v[k - 1] = coef
        cols.append(v)
    return Matrix.from_columns(cols, tgt_dim)


def alpha_central_pair():
    """2-dim L and 3-dim K with zero twists; pi is alpha-central but not central."""
    L = _alg(2, {(1, 2): {1: 1}}, labels=["a1", "a2"])
    K = _alg(3, {(1, 2): {1: 1}, (1, 3): {1: 1}, (2, 3): {2: 1}}, labels=["b1", "b2", "b3"])
    pi = Morphism(K, L, _images(3, 2, {2: {1: 1}, 3: {2: 1}}))
    return L, K, pi


def perfect_tower():
    """L (4-dim), K (5-dim), F (6-dim), all with zero twist, and pi: K -> L, rho: F -> K."""
    L = _alg(
        4,
        {(1, 3): {4: 1}, (1, 4): {3: 1}, (2, 3): {1: 1}, (2, 4): {2: 1}},
        labels=["a1", "a2", "a3", "a4"],
    )
    K = _alg(
        5,
        {(2, 3): {1: 1}, (2, 4): {5: 1}, (2, 5): {4: 1}, (3, 4): {2: 1}, (3, 5): {3: 1}},
        labels=["b1", "b2", "b3", "b4", "b5"],
    )
    F = _alg(
        6,
        {
            (2, 3): {1: 1}, (2, 4): {1: 1}, (2, 5): {1: 1},
            (3, 4): {2: 1}, (3, 5): {6: 1}, (3, 6): {5: 1},
            (4, 5): {3: 1}, (4, 6): {4: 1}, (5, 6): {1: 1},
        },
        labels=["e1", "e2", "e3", "e4", "e5", "e6"],
    )
    pi = Morphism(K, L, _images(5, 4, {2: {1: 1}, 3: {2: 1}, 4: {3: 1}, 5: {4: 1}}))
    rho = Morphism(F, K, _images(6, 5, {3: {2: 1}, 4: {3: 1}, 5: {4: 1}, 6: {5: 1}, 2: {1: 1}}))
    return L, K, F, pi, rho


def unipotent_pair():
    """Lie algebra [e, f] = e with unipotent twist, acting on the ideal <e>.

    Returns ``(L, M_dim, alpha_M, rho)``: the action is the bracket,
    ``e . e = 0`` and ``f . e = [f, e] = -e``, with ``alpha_M = Id``.
    """
    L = _alg(2, {(1, 2): {1: 1}}, alpha=[[1, 1], [0, 1]], labels=["e", "f"])
    rho = (Matrix([[0]]), Matrix([[-1]]))
    return L, 1, Matrix.identity(1), rho


def two_dim_representatives():
    """One algebra per class of the 2-dimensional classification."""
    return {
        "a": HomLieAlgebra.abelian(2, [[1, 2], [0, 3]]),
        "b": _alg(2, {(1, 2): {1: 1}}, alpha=[[0, 0], [0, 1]]),
        "c": _alg(2, {(1, 2): {1: 1}}, alpha=[[2, 1], [0, 1]]),
    }


def sl2():
    """Classical sl2 with basis (e, f, h): [h, e] = 2e, [h, f] = -2f, [e, f] = h; twist = Id."""
    return _alg(
        3,
        {(3, 1): {1: 2}, (3, 2): {2: -2}, (1, 2): {3: 1}},
        alpha=Matrix.identity(3),
        labels=["e", "f", "h"],
    )
