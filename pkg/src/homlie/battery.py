"""Named assertions over the built-in fixtures.

Each assertion reads its objects from a :class:`~homlie.document.Document`
by fixture name, so a document that overrides a fixture changes what is
checked.  A failing assertion carries a witness describing what was found.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .algebra import (
    center,
    check_action,
    check_morphism,
    classify_2dim,
    commutator,
    is_perfect,
    validate,
)
from .algebra.action import adjoint_action
from .document import Document, builtin_document
from .exactlin import Matrix, Subspace, format_rational, unit_vector
from .extensions import compose, is_alpha_central, is_central, lift, make_extension, uce
from .homology import (
    HomModule,
    chain_complex,
    h0_closed_form,
    h1_closed_form_trivial,
    homology,
    verify_cartan,
)


@dataclass(frozen=True)
class Outcome:
    name: str
    passed: bool
    witness: Any = None

    def as_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if not self.passed:
            out["witness"] = jsonable(self.witness)
        return out


def jsonable(x: Any) -> Any:
    """Fractions become ``"a/b"`` strings, tuples become lists."""
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, Matrix):
        return [[format_rational(v) for v in r] for r in x.rows]
    return str(x)


def _span(dim: int, *idx: int) -> Subspace:
    """Span of 1-based basis vectors."""
    return Subspace.span([unit_vector(dim, i - 1) for i in idx], dim)


def _show(S: Subspace) -> list[list[str]]:
    return [[format_rational(x) for x in v] for v in S.vectors()]


def _eq(found, expected):
    """(passed, witness) for an equality test."""
    if found == expected:
        return True, None
    if isinstance(found, Subspace):
        return False, {"found": _show(found), "expected": _show(expected)}
    return False, {"found": found, "expected": expected}


def _checks(doc: Document) -> list[tuple[str, Callable[[], tuple[bool, Any]]]]:
    A, M = doc.algebras, doc.morphisms

    def ext(name):
        return make_extension(M[name].morphism)

    def valid(name):
        r = validate(A[name])
        return r.ok, None if r.ok else str(r.first())

    checks: list[tuple[str, Callable[[], tuple[bool, Any]]]] = []
    for name in ("tower-L", "tower-K", "tower-F", "acentral-L", "acentral-K", "unipotent-L"):
        checks.append((f"{name} is a multiplicative Hom-Lie algebra", lambda n=name: valid(n)))
    checks += [
        ("tower-L bracket [a1, a3] = a4", lambda: _eq(A["tower-L"].bracket(unit_vector(4, 0), unit_vector(4, 2)),
                                                      unit_vector(4, 3))),
        ("tower-K is perfect", lambda: (is_perfect(A["tower-K"]), None)),
        ("tower-F is perfect", lambda: (is_perfect(A["tower-F"]), None)),
        ("Z(tower-K) = <b1>", lambda: _eq(center(A["tower-K"]), _span(5, 1))),
        ("Z(tower-F) = <e1>", lambda: _eq(center(A["tower-F"]), _span(6, 1))),
        ("tower-pi is a surjective morphism",
         lambda: (check_morphism(M["tower-pi"].morphism).ok and M["tower-pi"].morphism.is_surjective(), None)),
        ("tower-rho is a surjective morphism",
         lambda: (check_morphism(M["tower-rho"].morphism).ok and M["tower-rho"].morphism.is_surjective(), None)),
        ("Ker tower-pi = <b1>", lambda: _eq(ext("tower-pi").kernel, _span(5, 1))),
        ("Ker tower-rho = <e1> = Z(tower-F)", lambda: _eq(ext("tower-rho").kernel, center(A["tower-F"]))),
        ("Ker (pi rho) = <e1, e2>", lambda: _eq(compose(ext("tower-pi"), ext("tower-rho")).kernel, _span(6, 1, 2))),
        ("tower-pi is central", lambda: (is_central(ext("tower-pi")), None)),
        ("tower-rho is central", lambda: (is_central(ext("tower-rho")), None)),
        ("pi rho is not central", lambda: (not is_central(compose(ext("tower-pi"), ext("tower-rho"))), None)),
        ("pi rho is alpha-central", lambda: (is_alpha_central(compose(ext("tower-pi"), ext("tower-rho"))), None)),
        ("acentral-pi is alpha-central", lambda: (is_alpha_central(ext("acentral-pi")), None)),
        ("acentral-pi is not central", lambda: (not is_central(ext("acentral-pi")), None)),
        ("Ker acentral-pi = <b1>", lambda: _eq(ext("acentral-pi").kernel, _span(3, 1))),
        ("[Ker acentral-pi, acentral-K] = <b1>",
         lambda: _eq(commutator(A["acentral-K"], ext("acentral-pi").kernel, check=False), _span(3, 1))),
        ("unipotent-M is a Hom-module", _module_ok(doc, "unipotent-M")),
        ("class2-a is abelian", _classified(doc, "class2-a", "abelian", {})),
        ("class2-b is class b with (0, 1)", _classified(doc, "class2-b", "b", {"alpha12": 0, "alpha22": 1})),
        ("class2-c is class c with (2, 1)", _classified(doc, "class2-c", "c", {"alpha11": 2, "alpha12": 1})),
    ]
    for name in ("tower-L", "tower-K", "tower-F", "sl2"):
        checks.append((f"adjoint action of {name} is a Hom-action", _adjoint_ok(doc, name)))
        checks.append((f"H0 and H1 of {name} match the closed forms", _low_degree(doc, name)))
    for name in ("tower-L", "tower-K", "tower-F", "sl2", "abelian-3"):
        checks.append((f"Cartan identities for {name}, degrees 0..3", _cartan(doc, name)))
    checks += [
        ("H2(abelian-3) = 3", lambda: _eq(homology(chain_complex(A["abelian-3"]), 2).dim, 3)),
        ("uce(tower-K): all structural checks", _uce_ok(doc, "tower-K")),
        ("uce(tower-K): dim Ker u = dim H2 = 5", _uce_kernel(doc, "tower-K", 5)),
        ("uce(sl2): trivial kernel", _uce_kernel(doc, "sl2", 0)),
        ("uce(tower-K) lifts through tower-rho", _lift_rho(doc)),
    ]
    return checks


def _module_ok(doc, name):
    def run():
        e = doc.modules[name]
        r = e.module.check(doc.algebras[e.algebra])
        return r.ok, None if r.ok else str(r.first())
    return run


def _classified(doc, name, label, params):
    def run():
        c = classify_2dim(doc.algebras[name])
        return _eq({"label": c.label, "params": c.params}, {"label": label, "params": params})
    return run


def _adjoint_ok(doc, name):
    def run():
        L = doc.algebras[name]
        r = check_action(L, L.dim, L.alpha, adjoint_action(L))
        return r.ok, None if r.ok else str(r.first())
    return run


def _low_degree(doc, name):
    def run():
        L = doc.algebras[name]
        cc = chain_complex(L, max_degree=1)
        found = [homology(cc, 0).dim, homology(cc, 1).dim]
        return _eq(found, [h0_closed_form(cc), h1_closed_form_trivial(cc)])
    return run


def _cartan(doc, name):
    def run():
        L = doc.algebras[name]
        top = min(3, L.dim)
        cc = chain_complex(L, HomModule.trivial(L), max_degree=top)
        bad = {}
        for n in range(top + 1):
            r = verify_cartan(cc, n)
            if not r.ok:
                bad[n] = {k: v for k, v in r.checks.items() if v is False}
        return not bad, bad or None
    return run


def _uce_ok(doc, name):
    def run():
        u = uce(doc.algebras[name])
        return u.ok, None if u.ok else {k: v for k, v in u.checks.items() if not v}
    return run


def _uce_kernel(doc, name, expected):
    def run():
        u = uce(doc.algebras[name])
        return _eq([u.kernel_dim, u.h2_dim], [expected, expected])
    return run


def _lift_rho(doc):
    def run():
        u = uce(doc.algebras["tower-K"])
        rho = doc.morphisms["tower-rho"].morphism
        phi = lift(u, make_extension(rho))
        return _eq(rho.matrix @ phi.matrix, u.u_L.matrix)
    return run


def run_battery(doc: Document | None = None) -> list[Outcome]:
    """Run every assertion; ``doc`` entries override the built-in fixtures."""
    base = builtin_document()
    doc = base if doc is None else doc.merged_over(base)
    out = []
    for name, fn in _checks(doc):
        try:
            passed, witness = fn()
        except Exception as exc:  # a broken fixture must fail its assertion, not the run
            passed, witness = False, f"{type(exc).__name__}: {exc}"
        out.append(Outcome(name, bool(passed), witness))
    return out
