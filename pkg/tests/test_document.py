import copy
import json

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from homlie.document import (
    Document,
    DocumentError,
    ValidationFailure,
    builtin_document,
    dump,
    from_data,
    normalize,
    parse,
    to_data,
)
from homlie.fixtures import perfect_tower, unipotent_pair

SMALL = """{
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
}"""


def test_parse_small_document():
    doc = parse(SMALL)
    L = doc.algebras["L"]
    assert L == unipotent_pair()[0]
    assert L.c[1][0] == (-1, 0)
    assert doc.modules["M"].module.rho[1].rows == ((-1,),)
    assert doc.names() == ["L", "M", "f"]


def test_builtin_document_round_trip():
    text = dump(builtin_document())
    doc = parse(text)
    assert dump(doc) == text
    assert doc.algebras["tower-K"] == perfect_tower()[1]


def test_normalize_is_idempotent():
    once = normalize(SMALL)
    assert normalize(once) == once
    assert once.endswith("\n") and json.loads(once)["schema_version"] == "1"


def test_explicit_reverse_bracket_wins_and_diagonal_allowed():
    data = json.loads(SMALL)
    data["algebras"]["L"]["brackets"].append({"i": 2, "j": 1, "coefficients": ["-1", "0"]})
    doc = from_data(data)
    assert doc.algebras["L"].c[1][0] == (-1, 0)
    data["algebras"]["L"]["brackets"].append({"i": 1, "j": 1, "coefficients": ["1", "0"]})
    with pytest.raises(ValidationFailure):
        from_data(data)
    assert from_data(data, validate_objects=False).algebras["L"].c[0][0] == (1, 0)


def test_missing_alpha_is_zero():
    data = json.loads(SMALL)
    del data["algebras"]["L"]["alpha"]
    del data["modules"]
    assert from_data(data).algebras["L"].alpha.is_zero()


@pytest.mark.parametrize(
    "mutate, path",
    [
        (lambda d: d["algebras"]["L"].update(dim=-1), "$.algebras.L.dim"),
        (lambda d: d["algebras"]["L"].update(alpha=[["0.5", "0"], ["0", "1"]]), "$.algebras.L.alpha[0][0]"),
        (lambda d: d["algebras"]["L"].update(alpha=[[1.0, 0], [0, 1]]), "$.algebras.L.alpha[0][0]"),
        (lambda d: d["algebras"]["L"].update(colour="red"), "$.algebras.L"),
        (lambda d: d["modules"]["M"].update(algebra="nope"), "$.modules.M.algebra"),
        (lambda d: d["morphisms"]["f"].update(matrix=[["1"]]), "$.morphisms.f.matrix"),
        (lambda d: d.update(schema_version="9"), "$.schema_version"),
    ],
)
def test_structured_errors_carry_paths(mutate, path):
    data = json.loads(SMALL)
    mutate(data)
    with pytest.raises(DocumentError) as info:
        from_data(data)
    assert info.value.path == path


def test_names_must_be_unique_across_sections():
    data = json.loads(SMALL)
    data["morphisms"]["L"] = data["morphisms"].pop("f")
    with pytest.raises(DocumentError):
        from_data(data)


def test_dimension_cap():
    data = {"schema_version": "1", "algebras": {"big": {"dim": 65}}}
    with pytest.raises(DocumentError):
        from_data(data)


def test_json_syntax_error_has_line_and_column():
    with pytest.raises(DocumentError) as info:
        parse('{\n  "schema_version": "1",\n  oops\n}')
    assert (info.value.line, info.value.column) == (3, 3)


def test_validation_failure_names_the_object():
    data = json.loads(SMALL)
    data["algebras"]["L"]["alpha"] = [["1", "0"], ["0", "2"]]
    del data["modules"]
    with pytest.raises(ValidationFailure) as info:
        from_data(data)
    assert info.value.name == "L"


def test_merge_overrides_builtins():
    user = parse(SMALL)
    merged = user.merged_over(builtin_document())
    assert "L" in merged.algebras and "tower-K" in merged.algebras
    assert isinstance(Document(), Document)


# fuzzing: the parser either succeeds or raises one of its own errors

json_values = st.recursive(
    st.none() | st.booleans() | st.integers(-3, 70) | st.floats(allow_nan=False) | st.text(max_size=5)
    | st.sampled_from(["1/2", "0", "-1", "1/0", "L", "x"]),
    lambda inner: st.lists(inner, max_size=4) | st.dictionaries(st.text(max_size=6), inner, max_size=4),
    max_leaves=20,
)


@settings(max_examples=300, deadline=None)
@given(st.text(max_size=200))
def test_parser_never_crashes_on_text(text):
    try:
        parse(text)
    except (DocumentError, ValidationFailure):
        pass


def _paths(obj, prefix=()):
    yield prefix
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _paths(v, prefix + (k,))
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            yield from _paths(v, prefix + (i,))


BASE = json.loads(SMALL)
BASE_PATHS = [p for p in _paths(BASE) if p]


@settings(max_examples=400, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.sampled_from(BASE_PATHS), json_values, st.booleans())
def test_parser_never_crashes_on_mutated_documents(path, value, validate):
    data = copy.deepcopy(BASE)
    node = data
    for k in path[:-1]:
        node = node[k]
    node[path[-1]] = value
    try:
        doc = from_data(data, validate_objects=validate)
    except (DocumentError, ValidationFailure) as exc:
        assert str(exc)
    else:
        # anything accepted must serialise and re-parse to the same text
        text = dump(doc)
        assert dump(parse(text, validate_objects=False)) == text


def test_to_data_is_sorted():
    data = to_data(builtin_document())
    assert list(data["algebras"]) == sorted(data["algebras"])
