"""Hom-actions of a Hom-Lie algebra on a vector space.

An action is stored as ``rho``: a sequence of ``L.dim`` square matrices,
``rho[i]`` being ``m -> a_i . m``.
"""

from __future__ import annotations

from typing import Sequence

from ..errors import DimensionError
from ..exactlin import Matrix, Rational, lincomb
from .core import HomLieAlgebra, Tensor, ValidationReport, Violation


def as_action(rho, L_dim: int, M_dim: int) -> tuple[Matrix, ...]:
    mats = tuple(r if isinstance(r, Matrix) else Matrix(r, M_dim) for r in rho)
    if len(mats) != L_dim or any(r.shape != (M_dim, M_dim) for r in mats):
        raise DimensionError(f"action must be {L_dim} matrices of shape {M_dim}x{M_dim}")
    return mats


def act(rho: Sequence[Matrix], x: Sequence[Rational], M_dim: int) -> Matrix:
    """Matrix of ``m -> x . m`` for an arbitrary element ``x``."""
    out = Matrix.zeros(M_dim, M_dim)
    for xi, r in zip(x, rho):
        if xi:
            out = out + r.scale(xi)
    return out


def _mbracket(c: Tensor | None, u, v, n: int):
    if c is None:
        return (0,) * n
    return lincomb(((u[i] * v[j], c[i][j]) for i in range(n) if u[i] for j in range(n) if v[j]), n)


def check_action(
    L: HomLieAlgebra,
    M_dim: int,
    alpha_M,
    rho,
    bracket_M: Tensor | None = None,
) -> ValidationReport:
    """Check the three Hom-action axioms on basis elements.

    a) [x, y] . alpha_M(m) = alpha(x) . (y . m) - alpha(y) . (x . m)
    b) alpha(x) . [m, m'] = [x . m, alpha_M(m')] + [alpha_M(m), x . m']
    c) alpha_M(x . m) = alpha(x) . alpha_M(m)

    ``bracket_M`` gives M's own structure constants; omitted means M is
    abelian, in which case b) holds trivially.
    """
    aM = alpha_M if isinstance(alpha_M, Matrix) else Matrix(alpha_M, M_dim)
    if aM.shape != (M_dim, M_dim):
        raise DimensionError("alpha_M has the wrong shape")
    rho = as_action(rho, L.dim, M_dim)
    n = L.dim
    twisted = [act(rho, L.twist_basis(i), M_dim) for i in range(n)]
    violations = []

    a_ok = True
    for i in range(n):
        for j in range(i + 1, n):
            lhs = act(rho, L.c[i][j], M_dim) @ aM
            rhs = twisted[i] @ rho[j] - twisted[j] @ rho[i]
            diff = lhs - rhs
            for k in range(M_dim):
                for m in range(M_dim):
                    if diff[k, m]:
                        a_ok = False
                        violations.append(Violation("a", (i + 1, j + 1, m + 1, k + 1), diff[k, m]))

    b_ok = True
    if bracket_M is not None:
        e = [tuple(1 if k == m else 0 for k in range(M_dim)) for m in range(M_dim)]
        for i in range(n):
            for m in range(M_dim):
                for mm in range(M_dim):
                    lhs = twisted[i] @ _mbracket(bracket_M, e[m], e[mm], M_dim)
                    r1 = _mbracket(bracket_M, rho[i] @ e[m], aM @ e[mm], M_dim)
                    r2 = _mbracket(bracket_M, aM @ e[m], rho[i] @ e[mm], M_dim)
                    for k in range(M_dim):
                        r = lhs[k] - r1[k] - r2[k]
                        if r:
                            b_ok = False
                            violations.append(Violation("b", (i + 1, m + 1, mm + 1, k + 1), r))

    c_ok = True
    for i in range(n):
        diff = aM @ rho[i] - twisted[i] @ aM
        for k in range(M_dim):
            for m in range(M_dim):
                if diff[k, m]:
                    c_ok = False
                    violations.append(Violation("c", (i + 1, m + 1, k + 1), diff[k, m]))

    return ValidationReport({"a": a_ok, "b": b_ok, "c": c_ok}, tuple(violations))


def adjoint_action(L: HomLieAlgebra) -> tuple[Matrix, ...]:
    """``rho[i] = ad(a_i)``: L acting on itself through the bracket."""
    return tuple(L.ad(L.basis_vector(i)) for i in range(L.dim))
