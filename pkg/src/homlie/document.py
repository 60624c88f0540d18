"""JSON documents holding named algebras, modules and morphisms.

Layout (all indices 1-based, rationals as strings ``"a/b"``)::

    {
      "schema_version": "1",
      "algebras": {
        "L": {"dim": 2, "labels": ["e", "f"],
              "brackets": [{"i": 1, "j": 2, "coefficients": ["1", "0"]}],
              "alpha": [["1", "1"], ["0", "1"]]}
      },
      "modules": {
        "M": {"algebra": "L", "dim": 1, "alpha": [["1"]],
              "action": [{"x": 2, "matrix": [["-1"]]}]}
      },
      "morphisms": {
        "f": {"source": "L", "target": "L", "matrix": [["1", "0"], ["0", "1"]]}
      }
    }

A bracket entry ``(i, j)`` also defines ``[a_j, a_i]`` as its negative unless
that entry is given explicitly.  Missing brackets are zero, a missing
``alpha`` is zero and missing action entries are zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .algebra import HomLieAlgebra, Morphism, check_morphism, validate
from .errors import HomLieError
from .exactlin import Matrix, Rational, format_rational, parse_rational
from .homology import HomModule

SCHEMA_VERSION = "1"


class DocumentError(HomLieError):
    """A document could not be parsed; carries a JSON path or line/column."""

    def __init__(self, message: str, path: str = "$", line: int | None = None, column: int | None = None):
        where = f"line {line}, column {column}" if line is not None else path
        super().__init__(f"{where}: {message}")
        self.path = path
        self.line = line
        self.column = column


class ValidationFailure(HomLieError):
    """An object in a document fails its axioms."""

    def __init__(self, name: str, report):
        super().__init__(f"{name} fails validation: {report.first()}")
        self.name = name
        self.report = report


@dataclass(frozen=True)
class ModuleEntry:
    algebra: str
    module: HomModule


@dataclass(frozen=True)
class MorphismEntry:
    source: str
    target: str
    morphism: Morphism


@dataclass
class Document:
    schema_version: str = SCHEMA_VERSION
    algebras: dict[str, HomLieAlgebra] = field(default_factory=dict)
    modules: dict[str, ModuleEntry] = field(default_factory=dict)
    morphisms: dict[str, MorphismEntry] = field(default_factory=dict)

    def names(self) -> list[str]:
        return sorted({*self.algebras, *self.modules, *self.morphisms})

    def merged_over(self, base: "Document") -> "Document":
        """A copy of ``base`` with every entry of ``self`` replacing it."""
        return Document(
            self.schema_version,
            {**base.algebras, **self.algebras},
            {**base.modules, **self.modules},
            {**base.morphisms, **self.morphisms},
        )


# parsing ------------------------------------------------------------------


def _expect(cond: bool, msg: str, path: str) -> None:
    if not cond:
        raise DocumentError(msg, path)


def _int(v: Any, path: str, lo: int = 0) -> int:
    _expect(isinstance(v, int) and not isinstance(v, bool), "expected an integer", path)
    _expect(v >= lo, f"expected an integer >= {lo}", path)
    return v


def _scalar(v: Any, path: str) -> Rational:
    if isinstance(v, bool) or isinstance(v, float):
        raise DocumentError("rationals must be strings 'a/b' or integers", path)
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return parse_rational(v)
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"bad rational {v!r}: {exc}", path) from None
    raise DocumentError("rationals must be strings 'a/b' or integers", path)


def _vector(v: Any, n: int, path: str) -> tuple[Rational, ...]:
    _expect(isinstance(v, list), "expected a list", path)
    _expect(len(v) == n, f"expected {n} entries, got {len(v)}", path)
    return tuple(_scalar(x, f"{path}[{k}]") for k, x in enumerate(v))


def _matrix(v: Any, r: int, c: int, path: str) -> Matrix:
    _expect(isinstance(v, list), "expected a list of rows", path)
    _expect(len(v) == r, f"expected {r} rows, got {len(v)}", path)
    return Matrix([_vector(row, c, f"{path}[{k}]") for k, row in enumerate(v)], c)


def _obj(v: Any, path: str, required: set[str], optional: set[str] = frozenset()) -> dict:
    _expect(isinstance(v, dict), "expected an object", path)
    missing = required - v.keys()
    _expect(not missing, f"missing keys {sorted(missing)}", path)
    extra = v.keys() - required - optional
    _expect(not extra, f"unknown keys {sorted(extra)}", path)
    return v


def _name_map(v: Any, path: str) -> dict:
    _expect(isinstance(v, dict), "expected an object of named entries", path)
    for k in v:
        _expect(bool(k), "names must be non-empty", path)
    return v


def _parse_algebra(v: Any, path: str) -> HomLieAlgebra:
    d = _obj(v, path, {"dim"}, {"labels", "brackets", "alpha"})
    n = _int(d["dim"], f"{path}.dim")
    _expect(n <= 64, "dimension too large", f"{path}.dim")
    labels = d.get("labels")
    if labels is not None:
        _expect(isinstance(labels, list) and len(labels) == n and all(isinstance(s, str) for s in labels),
                f"labels must be {n} strings", f"{path}.labels")
        labels = tuple(labels)
    given: dict[tuple[int, int], tuple] = {}
    brackets = d.get("brackets", [])
    _expect(isinstance(brackets, list), "expected a list", f"{path}.brackets")
    for k, e in enumerate(brackets):
        p = f"{path}.brackets[{k}]"
        e = _obj(e, p, {"i", "j", "coefficients"})
        i, j = _int(e["i"], f"{p}.i", 1), _int(e["j"], f"{p}.j", 1)
        _expect(i <= n and j <= n, f"index out of range 1..{n}", p)
        _expect((i, j) not in given, f"duplicate bracket ({i}, {j})", p)
        given[i, j] = _vector(e["coefficients"], n, f"{p}.coefficients")
    c = [[(0,) * n for _ in range(n)] for _ in range(n)]
    for (i, j), vec in given.items():
        c[i - 1][j - 1] = vec
        if i != j and (j, i) not in given:
            c[j - 1][i - 1] = tuple(-x for x in vec)
    alpha = _matrix(d["alpha"], n, n, f"{path}.alpha") if "alpha" in d else Matrix.zeros(n, n)
    return HomLieAlgebra(n, tuple(tuple(r) for r in c), alpha, labels)


def _parse_module(v: Any, path: str, algebras: dict[str, HomLieAlgebra]) -> ModuleEntry:
    d = _obj(v, path, {"algebra", "dim"}, {"alpha", "action"})
    name = d["algebra"]
    _expect(isinstance(name, str) and name in algebras, f"unknown algebra {name!r}", f"{path}.algebra")
    L = algebras[name]
    m = _int(d["dim"], f"{path}.dim")
    _expect(m <= 64, "dimension too large", f"{path}.dim")
    alpha = _matrix(d["alpha"], m, m, f"{path}.alpha") if "alpha" in d else Matrix.zeros(m, m)
    rho = [Matrix.zeros(m, m) for _ in range(L.dim)]
    seen = set()
    action = d.get("action", [])
    _expect(isinstance(action, list), "expected a list", f"{path}.action")
    for k, e in enumerate(action):
        p = f"{path}.action[{k}]"
        e = _obj(e, p, {"x", "matrix"})
        x = _int(e["x"], f"{p}.x", 1)
        _expect(x <= L.dim, f"index out of range 1..{L.dim}", f"{p}.x")
        _expect(x not in seen, f"duplicate action entry for x = {x}", p)
        seen.add(x)
        rho[x - 1] = _matrix(e["matrix"], m, m, f"{p}.matrix")
    return ModuleEntry(name, HomModule(m, alpha, tuple(rho)))


def _parse_morphism(v: Any, path: str, algebras: dict[str, HomLieAlgebra]) -> MorphismEntry:
    d = _obj(v, path, {"source", "target", "matrix"})
    for key in ("source", "target"):
        _expect(isinstance(d[key], str) and d[key] in algebras, f"unknown algebra {d[key]!r}", f"{path}.{key}")
    S, T = algebras[d["source"]], algebras[d["target"]]
    return MorphismEntry(d["source"], d["target"], Morphism(S, T, _matrix(d["matrix"], T.dim, S.dim, f"{path}.matrix")))


def from_data(data: Any, validate_objects: bool = True) -> Document:
    d = _obj(data, "$", {"schema_version"}, {"algebras", "modules", "morphisms"})
    _expect(d["schema_version"] == SCHEMA_VERSION, f"unsupported schema_version {d['schema_version']!r}",
            "$.schema_version")
    doc = Document()
    names: set[str] = set()
    for section in ("algebras", "modules", "morphisms"):
        for k in _name_map(d.get(section, {}), f"$.{section}"):
            _expect(k not in names, f"duplicate name {k!r}", f"$.{section}")
            names.add(k)
    for k, v in d.get("algebras", {}).items():
        doc.algebras[k] = _parse_algebra(v, f"$.algebras.{k}")
    for k, v in d.get("modules", {}).items():
        doc.modules[k] = _parse_module(v, f"$.modules.{k}", doc.algebras)
    for k, v in d.get("morphisms", {}).items():
        doc.morphisms[k] = _parse_morphism(v, f"$.morphisms.{k}", doc.algebras)
    if validate_objects:
        validate_document(doc)
    return doc


def validate_document(doc: Document) -> None:
    for k, L in doc.algebras.items():
        report = validate(L)
        if not report.ok:
            raise ValidationFailure(k, report)
    for k, e in doc.modules.items():
        report = e.module.check(doc.algebras[e.algebra])
        if not report.ok:
            raise ValidationFailure(k, report)
    for k, e in doc.morphisms.items():
        report = check_morphism(e.morphism)
        if not report.ok:
            raise ValidationFailure(k, report)


def parse(text: str, validate_objects: bool = True) -> Document:
    """Parse a JSON document; errors carry line/column or a JSON path."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, line=exc.lineno, column=exc.colno) from None
    except RecursionError:
        raise DocumentError("document nested too deeply") from None
    return from_data(data, validate_objects)


# serialisation --------------------------------------------------------------


def _fmt_rows(m: Matrix) -> list[list[str]]:
    return [[format_rational(x) for x in r] for r in m.rows]


def algebra_data(L: HomLieAlgebra) -> dict:
    n = L.dim
    brackets = []
    for i in range(n):
        for j in range(n):
            v = L.c[i][j]
            if i < j:
                emit = any(v) or any(L.c[j][i])
            elif i == j:
                emit = any(v)
            else:
                emit = any(a + b for a, b in zip(v, L.c[j][i]))
            if emit:
                brackets.append({"i": i + 1, "j": j + 1, "coefficients": [format_rational(x) for x in v]})
    out: dict[str, Any] = {"dim": n, "brackets": brackets, "alpha": _fmt_rows(L.alpha)}
    if L.labels:
        out["labels"] = list(L.labels)
    return out


def module_data(algebra: str, M: HomModule) -> dict:
    action = [
        {"x": i + 1, "matrix": _fmt_rows(r)} for i, r in enumerate(M.rho) if not r.is_zero()
    ]
    return {"algebra": algebra, "dim": M.dim, "alpha": _fmt_rows(M.alpha_M), "action": action}


def to_data(doc: Document) -> dict:
    return {
        "schema_version": doc.schema_version,
        "algebras": {k: algebra_data(L) for k, L in sorted(doc.algebras.items())},
        "modules": {k: module_data(e.algebra, e.module) for k, e in sorted(doc.modules.items())},
        "morphisms": {
            k: {"source": e.source, "target": e.target, "matrix": _fmt_rows(e.morphism.matrix)}
            for k, e in sorted(doc.morphisms.items())
        },
    }


def dump(doc: Document) -> str:
    """Canonical text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(to_data(doc), indent=2, sort_keys=True) + "\n"


def normalize(text: str) -> str:
    return dump(parse(text, validate_objects=False))


# built-in fixtures ------------------------------------------------------------


def builtin_document() -> Document:
    from . import fixtures as fx

    doc = Document()
    L, K, F, pi, rho = fx.perfect_tower()
    doc.algebras.update({"tower-L": L, "tower-K": K, "tower-F": F})
    doc.morphisms["tower-pi"] = MorphismEntry("tower-K", "tower-L", pi)
    doc.morphisms["tower-rho"] = MorphismEntry("tower-F", "tower-K", rho)
    L2, K2, pi2 = fx.alpha_central_pair()
    doc.algebras.update({"acentral-L": L2, "acentral-K": K2})
    doc.morphisms["acentral-pi"] = MorphismEntry("acentral-K", "acentral-L", pi2)
    U, m, aM, r = fx.unipotent_pair()
    doc.algebras["unipotent-L"] = U
    doc.modules["unipotent-M"] = ModuleEntry("unipotent-L", HomModule(m, aM, r))
    for k, A in fx.two_dim_representatives().items():
        doc.algebras[f"class2-{k}"] = A
    doc.algebras["sl2"] = fx.sl2()
    doc.algebras["abelian-3"] = HomLieAlgebra.abelian(3)
    return doc
