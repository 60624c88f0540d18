"""Hom-Lie algebras obtained from Lie algebras and Hom-associative algebras."""

from __future__ import annotations

from ..errors import AxiomError
from ..exactlin import Matrix, lincomb, vsub
from .core import HomLieAlgebra, ValidationReport, Violation, make_tensor, validate


def yau_twist(lie_c, alpha) -> HomLieAlgebra:
    """Twist a Lie algebra along an endomorphism: ``[x, y]_a = alpha[x, y]``."""
    alpha = alpha if isinstance(alpha, Matrix) else Matrix(alpha)
    n = alpha.nrows
    c = make_tensor(lie_c, n)
    lie = HomLieAlgebra(n, c, Matrix.identity(n))
    report = validate(lie)
    if not report.ok:
        raise AxiomError("input structure constants are not a Lie algebra", report)
    endo = validate(HomLieAlgebra(n, c, alpha))
    if not endo.multiplicative_ok:
        raise AxiomError("twist is not an endomorphism of the Lie algebra", endo)
    twisted = tuple(tuple(alpha @ c[i][j] for j in range(n)) for i in range(n))
    return HomLieAlgebra(n, twisted, alpha)


def _mul(mu, x, y, n):
    return lincomb(((x[i] * y[j], mu[i][j]) for i in range(n) if x[i] for j in range(n) if y[j]), n)


def check_hom_associative(mu, alpha) -> ValidationReport:
    """Hom-associativity ``mu(alpha x, mu(y, z)) = mu(mu(x, y), alpha z)`` and
    multiplicativity ``alpha mu(x, y) = mu(alpha x, alpha y)`` on basis elements."""
    alpha = alpha if isinstance(alpha, Matrix) else Matrix(alpha)
    n = alpha.nrows
    mu = make_tensor(mu, n)
    acols = alpha.columns()
    violations = []
    assoc_ok = True
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = _mul(mu, acols[i], mu[j][k], n)
                rhs = _mul(mu, mu[i][j], acols[k], n)
                for l, r in enumerate(vsub(lhs, rhs)):
                    if r:
                        assoc_ok = False
                        violations.append(Violation("hom-associative", (i + 1, j + 1, k + 1, l + 1), r))
    mult_ok = True
    for i in range(n):
        for j in range(n):
            res = vsub(alpha @ mu[i][j], _mul(mu, acols[i], acols[j], n))
            for l, r in enumerate(res):
                if r:
                    mult_ok = False
                    violations.append(Violation("multiplicative", (i + 1, j + 1, l + 1), r))
    return ValidationReport({"hom-associative": assoc_ok, "multiplicative": mult_ok}, tuple(violations))


def from_hom_associative(mu, alpha) -> HomLieAlgebra:
    """Commutator algebra ``[x, y] = mu(x, y) - mu(y, x)`` of a multiplicative
    Hom-associative algebra."""
    alpha = alpha if isinstance(alpha, Matrix) else Matrix(alpha)
    n = alpha.nrows
    mu_t = make_tensor(mu, n)
    report = check_hom_associative(mu_t, alpha)
    if not report.ok:
        raise AxiomError("input is not a multiplicative Hom-associative algebra", report)
    c = tuple(tuple(vsub(mu_t[i][j], mu_t[j][i]) for j in range(n)) for i in range(n))
    return HomLieAlgebra(n, c, alpha)
