"""Normal forms for 2-dimensional multiplicative Hom-Lie algebras.

Every non-abelian 2-dimensional algebra has ``[a1, a2] = v != 0`` and
``[x, y] = det(x, y) v``.  Taking ``a1' = v`` and a partner ``a2'`` with
``det(a1', a2') = 1`` gives ``[a1', a2'] = a1'``, after which multiplicativity
forces the twist into one of two shapes::

    b)  [[0, a12], [0, a22]]          (det alpha = 0)
    c)  [[a11, a12], [0, 1]], a11 != 0 (det alpha != 0)

The reduction uses field operations only, so it runs verbatim over Q; it
reports the form it reaches and makes no claim that the list of classes is
complete over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ..errors import AxiomError, DimensionError
from ..exactlin import Matrix, Rational
from ..exactlin.scalar import norm
from .core import HomLieAlgebra, validate


@dataclass(frozen=True)
class Classification:
    label: str  # "abelian", "b" or "c"
    params: dict[str, Rational]
    canonical: HomLieAlgebra
    change_of_basis: Matrix  # columns: the new basis in old coordinates


def _cleared(values):
    """Integers ``n_i`` and ``d > 0`` with ``values[i] = n_i / d``."""
    d = lcm(*(v.denominator for v in values))
    return [v.numerator * (d // v.denominator) for v in values], d


def _conj(P, A):
    """``P^-1 A P`` for 2x2 row tuples, in integer arithmetic after clearing denominators."""
    (p, q, r, s), _ = _cleared([*P[0], *P[1]])
    (a, b, c, d), dA = _cleared([*A[0], *A[1]])
    # adj(P) A P / (det(P) dA); the common scale of P cancels
    det = p * s - q * r
    m = ((s * a - q * c, s * b - q * d), (p * c - r * a, p * d - r * b))
    cols = ((p, r), (q, s))
    den = det * dA
    return [[norm(Fraction(m[i][0] * cols[j][0] + m[i][1] * cols[j][1], den)) for j in range(2)]
            for i in range(2)]


def _quick_ok(L: HomLieAlgebra) -> bool:
    """The 2-dim axioms in closed form: skew symmetry, and ``alpha v = det(alpha) v``
    for ``v = [a1, a2]``.  Hom-Jacobi always holds in dimension 2."""
    c = L.c
    if any(c[0][0]) or any(c[1][1]) or c[1][0] != tuple(-x for x in c[0][1]):
        return False
    (a, b, cc, d), dA = _cleared([*L.alpha.rows[0], *L.alpha.rows[1]])
    (x, y), _ = _cleared(c[0][1])
    det = a * d - b * cc
    return (a * x + b * y) * dA == det * x and (cc * x + d * y) * dA == det * y


def classify_2dim(L: HomLieAlgebra) -> Classification:
    if L.dim != 2:
        raise DimensionError("classify_2dim needs a 2-dimensional algebra")
    if not _quick_ok(L):
        report = validate(L)
        raise AxiomError("not a multiplicative Hom-Lie algebra", report)
    x, y = L.c[0][1]
    if not x and not y:
        return Classification("abelian", {}, L, Matrix.identity(2))
    if x:
        P = ((x, 0), (y, norm(Fraction(1) / x)))
    else:
        P = ((0, norm(Fraction(-1) / y)), (1, 0))
    # new basis a1' = v, a2' with det(a1', a2') = 1, so [a1', a2'] = a1'
    A = _conj(P, L.alpha.rows)
    canon = HomLieAlgebra(2, (((0, 0), (1, 0)), ((-1, 0), (0, 0))), Matrix(A, 2))
    if A[1][0]:
        raise AxiomError("twist does not preserve the bracket")  # unreachable after _quick_ok
    Pm = Matrix(P, 2)
    if A[0][0] == 0:
        return Classification("b", {"alpha12": A[0][1], "alpha22": A[1][1]}, canon, Pm)
    return Classification("c", {"alpha11": A[0][0], "alpha12": A[0][1]}, canon, Pm)
