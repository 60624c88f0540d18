"""Homomorphisms of Hom-Lie algebras and changes of basis."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DimensionError
from ..exactlin import Matrix, kernel, rank, vsub
from .core import HomLieAlgebra, ValidationReport, Violation


@dataclass(frozen=True)
class Morphism:
    """A linear map ``source -> target`` given by a ``target.dim x source.dim`` matrix."""

    source: HomLieAlgebra
    target: HomLieAlgebra
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise DimensionError(
                f"morphism matrix must be {self.target.dim}x{self.source.dim}, got {self.matrix.shape}"
            )

    def __call__(self, x):
        return self.matrix @ x

    def then(self, g: "Morphism") -> "Morphism":
        """``g`` after ``self``."""
        if g.source != self.target:
            raise DimensionError("composable morphisms need matching middle algebra")
        return Morphism(self.source, g.target, g.matrix @ self.matrix)

    def is_surjective(self) -> bool:
        return rank(self.matrix) == self.target.dim

    def is_injective(self) -> bool:
        return rank(self.matrix) == self.source.dim

    def kernel(self):
        return kernel(self.matrix)


def identity_morphism(L: HomLieAlgebra) -> Morphism:
    return Morphism(L, L, Matrix.identity(L.dim))


def check_morphism(f: Morphism) -> ValidationReport:
    """Check ``f[x, y] = [f x, f y]`` and ``f alpha = alpha' f`` on basis elements."""
    S, T, F = f.source, f.target, f.matrix
    cols = F.columns()
    violations = []
    bracket_ok = True
    for i in range(S.dim):
        for j in range(i + 1, S.dim):
            res = vsub(F @ S.c[i][j], T.bracket(cols[i], cols[j]))
            for k, r in enumerate(res):
                if r:
                    bracket_ok = False
                    violations.append(Violation("bracket", (i + 1, j + 1, k + 1), r))
    twist_ok = True
    diff = F @ S.alpha - T.alpha @ F
    for k in range(diff.nrows):
        for i in range(diff.ncols):
            if diff[k, i]:
                twist_ok = False
                violations.append(Violation("twist", (i + 1, k + 1), diff[k, i]))
    return ValidationReport({"bracket": bracket_ok, "twist": twist_ok}, tuple(violations))


def is_isomorphism(f: Morphism) -> bool:
    return f.matrix.is_invertible() and check_morphism(f).ok


def change_basis(L: HomLieAlgebra, P: Matrix) -> tuple[HomLieAlgebra, Morphism]:
    """Rewrite ``L`` in the basis whose j-th vector is column j of ``P``.

    Returns ``(L2, f)`` where ``L2`` has twist ``P^-1 A P`` and structure
    constants ``P^-1 [P e_i, P e_j]``, and ``f: L2 -> L`` is the isomorphism
    with matrix ``P``.
    """
    n = L.dim
    if P.shape != (n, n):
        raise DimensionError("change of basis must be square of size dim")
    Pinv = P.inverse()
    cols = P.columns()
    c = [[Pinv @ L.bracket(cols[i], cols[j]) for j in range(n)] for i in range(n)]
    L2 = HomLieAlgebra(n, tuple(tuple(r) for r in c), Pinv @ L.alpha @ P)
    return L2, Morphism(L2, L, P)
