"""Command-line interface: ``homlie <command> ...``.

Objects are looked up by name, first in the ``--doc`` document and then in
the built-in fixtures.  ``--json`` prints one JSON object on stdout with
sorted keys, so identical inputs give byte-identical output.

Exit codes: 0 success, 2 usage error, 3 parse error or unknown name,
4 validation failure, 5 failed mathematical assertion.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import __version__
from .algebra import center, classify_2dim, derived_algebra, is_perfect, validate
from .battery import jsonable, run_battery
from .document import (
    Document,
    DocumentError,
    ValidationFailure,
    builtin_document,
    dump,
    parse,
    validate_document,
)
from .errors import HomLieError
from .exactlin import Subspace, format_rational
from .extensions import (
    compose,
    is_alpha_central,
    is_central,
    make_extension,
    pullback,
    uce,
    universality_certificate,
)
from .homology import HomModule, chain_complex, homology, verify_cartan

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_INVALID, EXIT_ASSERT = 0, 2, 3, 4, 5


class CommandFailure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _vecs(S: Subspace) -> list[list[str]]:
    return [[format_rational(x) for x in v] for v in S.vectors()]


class Context:
    def __init__(self, args):
        self.args = args
        base = builtin_document()
        if args.doc:
            try:
                with open(args.doc, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise CommandFailure(EXIT_PARSE, f"cannot read {args.doc}: {exc.strerror}") from None
            except UnicodeDecodeError:
                raise CommandFailure(EXIT_PARSE, f"{args.doc} is not UTF-8 text") from None
            user = parse(text, validate_objects=False)
            self.user = user
            self.doc = user.merged_over(base)
        else:
            self.user = Document()
            self.doc = base

    def check_loaded(self) -> None:
        if not self.args.no_validate:
            validate_document(self.user)

    def algebra(self, name):
        if name not in self.doc.algebras:
            raise CommandFailure(EXIT_PARSE, f"unknown algebra {name!r}")
        return self.doc.algebras[name]

    def morphism(self, name):
        if name not in self.doc.morphisms:
            raise CommandFailure(EXIT_PARSE, f"unknown morphism {name!r}")
        return self.doc.morphisms[name].morphism

    def module(self, name, algebra_name):
        L = self.algebra(algebra_name)
        if name in (None, "trivial"):
            return HomModule.trivial(L)
        if name == "adjoint":
            return HomModule.adjoint(L)
        if name not in self.doc.modules:
            raise CommandFailure(EXIT_PARSE, f"unknown module {name!r}")
        entry = self.doc.modules[name]
        if entry.algebra != algebra_name and self.doc.algebras[entry.algebra] != L:
            raise CommandFailure(EXIT_PARSE, f"module {name!r} is defined over {entry.algebra!r}")
        return entry.module


# commands ---------------------------------------------------------------------


def cmd_validate(ctx: Context) -> tuple[dict, int]:
    L = ctx.algebra(ctx.args.name)
    r = validate(L)
    res = {
        "ok": r.ok,
        "skew_ok": r.skew_ok,
        "jacobi_ok": r.jacobi_ok,
        "multiplicative_ok": r.multiplicative_ok,
        "violations": [
            {"axiom": v.axiom, "indices": list(v.indices), "residual": format_rational(v.residual)}
            for v in r.violations
        ],
    }
    return res, EXIT_OK if r.ok else EXIT_INVALID


def cmd_invariants(ctx: Context) -> tuple[dict, int]:
    L = ctx.algebra(ctx.args.name)
    Z, D = center(L), derived_algebra(L)
    r = validate(L)
    return {
        "dim": L.dim,
        "center_dim": Z.dim,
        "center_basis": _vecs(Z),
        "derived_dim": D.dim,
        "perfect": is_perfect(L),
        "multiplicative": r.multiplicative_ok,
    }, EXIT_OK


def _degrees(args, L) -> list[int]:
    if args.degree is None:
        return list(range(L.dim + 1))
    if not 0 <= args.degree <= L.dim:
        raise CommandFailure(EXIT_USAGE, f"degree must lie in 0..{L.dim}")
    return [args.degree]


def cmd_homology(ctx: Context) -> tuple[dict, int]:
    L = ctx.algebra(ctx.args.name)
    M = ctx.module(ctx.args.module, ctx.args.name)
    degs = _degrees(ctx.args, L)
    cc = chain_complex(L, M, max_degree=max(degs), check=not ctx.args.no_validate)
    out = {}
    for n in degs:
        h = homology(cc, n)
        out[str(n)] = {"dim": h.dim, "representatives": [[format_rational(x) for x in v] for v in h.representatives]}
    return {"module": ctx.args.module or "trivial", "homology": out}, EXIT_OK


def cmd_cartan(ctx: Context) -> tuple[dict, int]:
    L = ctx.algebra(ctx.args.name)
    M = ctx.module(ctx.args.module, ctx.args.name)
    top = min(L.dim, 3) if ctx.args.degree is None else ctx.args.degree
    if not 0 <= top <= L.dim:
        raise CommandFailure(EXIT_USAGE, f"degree must lie in 0..{L.dim}")
    cc = chain_complex(L, M, max_degree=top, check=not ctx.args.no_validate)
    out, ok = {}, True
    for n in range(top + 1):
        r = verify_cartan(cc, n)
        ok &= r.ok
        out[str(n)] = {k: ("n/a" if v is None else v) for k, v in r.checks.items()}
    return {"module": ctx.args.module or "trivial", "degrees": out, "ok": ok}, EXIT_OK if ok else EXIT_ASSERT


def cmd_uce(ctx: Context) -> tuple[dict, int]:
    L = ctx.algebra(ctx.args.name)
    u = uce(L)
    n = L.dim
    res = {
        "dim_lambda2": n * (n - 1) // 2,
        "dim_I_L": u.I_L.dim,
        "dim_uce": u.uce_algebra.dim,
        "dim_ker_u": u.kernel_dim,
        "dim_H2": u.h2_dim,
        "h2_agrees": u.kernel_dim == u.h2_dim,
        "checks": u.checks,
    }
    return res, EXIT_OK if u.ok else EXIT_ASSERT


def _ext_summary(e) -> dict:
    return {
        "total_dim": e.total.dim,
        "base_dim": e.base.dim,
        "kernel_dim": e.kernel.dim,
        "kernel_basis": _vecs(e.kernel),
        "central": is_central(e),
        "alpha_central": is_alpha_central(e),
    }


def cmd_ext(ctx: Context) -> tuple[dict, int]:
    a = ctx.args
    if a.action == "info":
        return _ext_summary(make_extension(ctx.morphism(a.pi))), EXIT_OK
    if a.action == "compose":
        outer = make_extension(ctx.morphism(a.outer))
        inner = make_extension(ctx.morphism(a.inner))
        return _ext_summary(compose(outer, inner)), EXIT_OK
    if a.action == "pullback":
        pb = pullback(ctx.morphism(a.tau), ctx.morphism(a.pi))
        res = {"dim": pb.algebra.dim, "to_source": jsonable(pb.to_source.matrix),
               "to_total": jsonable(pb.to_total.matrix)}
        if pb.extension is not None:
            res["extension"] = _ext_summary(pb.extension)
        return res, EXIT_OK
    cert = universality_certificate(make_extension(ctx.morphism(a.pi)))
    return {"verdict": cert.verdict, "perfect": cert.perfect, "h1": cert.h1, "h2": cert.h2}, EXIT_OK


def cmd_classify2(ctx: Context) -> tuple[dict, int]:
    c = classify_2dim(ctx.algebra(ctx.args.name))
    return {
        "label": c.label,
        "params": {k: format_rational(v) for k, v in c.params.items()},
        "canonical_alpha": jsonable(c.canonical.alpha),
        "canonical_bracket_12": [format_rational(x) for x in c.canonical.c[0][1]],
        "change_of_basis": jsonable(c.change_of_basis),
    }, EXIT_OK


def cmd_paper_examples(ctx: Context) -> tuple[dict, int]:
    outcomes = run_battery(ctx.user)
    ok = all(o.passed for o in outcomes)
    return {"assertions": [o.as_dict() for o in outcomes], "passed": sum(o.passed for o in outcomes),
            "total": len(outcomes)}, EXIT_OK if ok else EXIT_ASSERT


def cmd_fixtures(ctx: Context) -> tuple[str, int]:
    return dump(ctx.user if ctx.args.doc else builtin_document()), EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "invariants": cmd_invariants,
    "homology": cmd_homology,
    "cartan": cmd_cartan,
    "uce": cmd_uce,
    "ext": cmd_ext,
    "classify2": cmd_classify2,
    "paper-examples": cmd_paper_examples,
    "fixtures": cmd_fixtures,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--doc", help="JSON document with extra or overriding objects")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--no-validate", action="store_true", help="skip axiom checks when loading")

    p = argparse.ArgumentParser(prog="homlie", description="Exact computations with Hom-Lie algebras.")
    p.add_argument("--version", action="version", version=f"homlie {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check the axioms of an algebra")
    s.add_argument("name")
    s = sub.add_parser("invariants", parents=[common], help="center, derived algebra, perfectness")
    s.add_argument("name")
    for cmd, hlp in (("homology", "homology dimensions and cycles"), ("cartan", "check the Cartan identities")):
        s = sub.add_parser(cmd, parents=[common], help=hlp)
        s.add_argument("name")
        s.add_argument("--module", help="module name, 'trivial' (default) or 'adjoint'")
        s.add_argument("--degree", type=int, help="single degree (homology) or top degree (cartan)")
    s = sub.add_parser("uce", parents=[common], help="universal central extension of a perfect algebra")
    s.add_argument("name")

    s = sub.add_parser("ext", help="extension queries")
    es = s.add_subparsers(dest="action", required=True)
    e = es.add_parser("info", parents=[common], help="kernel and centrality of an extension")
    e.add_argument("pi")
    e = es.add_parser("compose", parents=[common], help="composite of two extensions")
    e.add_argument("outer")
    e.add_argument("inner")
    e = es.add_parser("pullback", parents=[common], help="pullback of pi along tau")
    e.add_argument("tau")
    e.add_argument("pi")
    e = es.add_parser("certificate", parents=[common], help="homological universality test")
    e.add_argument("pi")

    s = sub.add_parser("classify2", parents=[common], help="normal form of a 2-dimensional algebra")
    s.add_argument("name")
    sub.add_parser("paper-examples", parents=[common], help="run the fixture assertion battery")
    sub.add_parser("fixtures", parents=[common], help="print the built-in fixtures (or --doc) canonically")
    return p


def _render_text(command: str, res: Any) -> str:
    if isinstance(res, str):
        return res.rstrip("\n")
    if command == "paper-examples":
        lines = [f"{'PASS' if a['passed'] else 'FAIL'}  {a['name']}" +
                 (f"  witness: {json.dumps(a['witness'], sort_keys=True)}" if not a["passed"] else "")
                 for a in res["assertions"]]
        lines.append(f"{res['passed']}/{res['total']} assertions passed")
        return "\n".join(lines)
    lines = []
    for k in sorted(res):
        v = res[k]
        lines.append(f"{k}: {json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.command if args.command != "ext" else f"ext {args.action}"
    try:
        ctx = Context(args)
        if args.command not in ("validate", "fixtures", "paper-examples"):
            ctx.check_loaded()
        res, code = COMMANDS[args.command](ctx)
    except DocumentError as exc:
        return _fail(args, command, EXIT_PARSE, str(exc))
    except ValidationFailure as exc:
        return _fail(args, command, EXIT_INVALID, str(exc))
    except CommandFailure as exc:
        return _fail(args, command, exc.code, str(exc))
    except HomLieError as exc:
        return _fail(args, command, EXIT_ASSERT, f"{type(exc).__name__}: {exc}")
    inputs = [getattr(args, k) for k in ("name", "outer", "inner", "tau", "pi") if hasattr(args, k)]
    if args.json:
        if isinstance(res, str):
            res = {"document": json.loads(res)}
        report = {"command": command, "inputs": inputs, "results": jsonable(res), "exit_code": code}
        sys.stdout.write(json.dumps(report, sort_keys=True) + "\n")
    else:
        sys.stdout.write(_render_text(args.command, jsonable(res) if not isinstance(res, str) else res) + "\n")
    return code


def _fail(args, command: str, code: int, message: str) -> int:
    if getattr(args, "json", False):
        sys.stdout.write(json.dumps({"command": command, "error": message, "exit_code": code}, sort_keys=True) + "\n")
    sys.stderr.write(f"homlie: error: {message}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
