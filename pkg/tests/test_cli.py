import json
import subprocess
import sys

import pytest

from homlie.cli import main
from homlie.document import builtin_document, dump


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def write_doc(tmp_path, data, name="doc.json"):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return str(p)


def test_validate_ok(capsys):
    code, rep = run_json(capsys, "validate", "tower-K")
    assert code == 0 and rep["exit_code"] == 0
    assert rep["command"] == "validate" and rep["inputs"] == ["tower-K"]


def test_unknown_name_is_exit_3(capsys):
    code, rep = run_json(capsys, "validate", "no-such")
    assert code == 3 and "error" in rep


def test_usage_error_is_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["homology"])
    assert info.value.code == 2
    code, _, err = run(capsys, "homology", "sl2", "--degree", "9")
    assert code == 2 and "degree" in err


def test_invalid_algebra_is_exit_4(capsys, tmp_path):
    data = {"schema_version": "1", "algebras": {"bad": {"dim": 2,
            "brackets": [{"i": 1, "j": 2, "coefficients": ["1", "0"]}], "alpha": [["1", "0"], ["0", "2"]]}}}
    path = write_doc(tmp_path, data)
    code, rep = run_json(capsys, "validate", "bad", "--doc", path, "--no-validate")
    assert code == 4 and rep["results"]["ok"] is False
    code, _ = run_json(capsys, "invariants", "bad", "--doc", path)
    assert code == 4


def test_parse_error_is_exit_3(capsys, tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{ not json")
    code, rep = run_json(capsys, "validate", "sl2", "--doc", str(p))
    assert code == 3 and "line 1" in rep["error"]
    code, _ = run_json(capsys, "validate", "sl2", "--doc", str(tmp_path / "missing.json"))
    assert code == 3


def test_homology_and_cartan(capsys):
    code, rep = run_json(capsys, "homology", "sl2")
    assert code == 0
    dims = [rep["results"]["homology"][str(n)]["dim"] for n in range(4)]
    assert dims == [1, 0, 0, 1]
    code, rep = run_json(capsys, "homology", "tower-L", "--degree", "1")
    # perfect, so dim L - dim [L, L] = 0
    assert code == 0 and rep["results"]["homology"]["1"]["dim"] == 0
    code, rep = run_json(capsys, "cartan", "tower-L", "--module", "adjoint", "--degree", "2")
    assert code == 0 and rep["results"]["ok"] is True
    code, rep = run_json(capsys, "homology", "unipotent-L", "--module", "unipotent-M")
    assert code == 0
    code, _ = run_json(capsys, "homology", "sl2", "--module", "unipotent-M")
    assert code == 3


def test_uce_command(capsys):
    code, rep = run_json(capsys, "uce", "tower-K")
    assert code == 0
    assert rep["results"]["dim_ker_u"] == rep["results"]["dim_H2"] == 5
    assert rep["results"]["dim_uce"] == 10
    code, rep = run_json(capsys, "uce", "abelian-3")
    assert code == 5 and "NotPerfectError" in rep["error"]


def test_ext_commands(capsys):
    code, rep = run_json(capsys, "ext", "info", "tower-pi")
    assert code == 0 and rep["results"]["central"] is True
    code, rep = run_json(capsys, "ext", "compose", "tower-pi", "tower-rho")
    assert code == 0 and rep["inputs"] == ["tower-pi", "tower-rho"]
    assert rep["results"]["central"] is False and rep["results"]["alpha_central"] is True
    code, rep = run_json(capsys, "ext", "pullback", "tower-pi", "tower-pi")
    assert code == 0
    code, rep = run_json(capsys, "ext", "certificate", "tower-rho")
    assert code == 0 and rep["results"]["verdict"] in ("universal-central", "not-universal", "inconclusive")
    code, rep = run_json(capsys, "ext", "certificate", "acentral-pi")
    assert code == 5 and "ExtensionError" in rep["error"]


def test_classify2(capsys):
    code, rep = run_json(capsys, "classify2", "class2-c")
    assert code == 0 and rep["results"]["label"] == "c"
    code, _ = run_json(capsys, "classify2", "sl2")
    assert code == 5


def test_paper_examples_all_pass(capsys):
    code, out, _ = run(capsys, "paper-examples")
    assert code == 0
    assert "FAIL" not in out
    code, rep = run_json(capsys, "paper-examples")
    assert rep["results"]["passed"] == rep["results"]["total"] > 40


def test_tampered_fixture_fails_with_witness(capsys, tmp_path):
    data = json.loads(dump(builtin_document()))
    # drop one bracket of tower-K; the algebra stays valid but is no longer perfect
    tk = data["algebras"]["tower-K"]
    tk["brackets"] = [b for b in tk["brackets"] if (b["i"], b["j"]) != (3, 5)]
    path = write_doc(tmp_path, {"schema_version": "1", "algebras": {"tower-K": tk}})
    code, rep = run_json(capsys, "paper-examples", "--doc", path)
    assert code == 5
    failed = [a for a in rep["results"]["assertions"] if not a["passed"]]
    assert any(a["name"] == "tower-K is perfect" for a in failed)
    assert all("witness" in a for a in failed)
    assert any(a["witness"] is not None for a in failed)


def test_fixtures_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "fixtures")
    assert code == 0 and out == dump(builtin_document())
    p = tmp_path / "fx.json"
    p.write_text(out)
    code, out2, _ = run(capsys, "fixtures", "--doc", str(p))
    assert out2 == out


COMMANDS = [
    ["validate", "tower-F"],
    ["invariants", "tower-K"],
    ["homology", "tower-L", "--module", "adjoint"],
    ["cartan", "sl2"],
    ["uce", "tower-L"],
    ["ext", "compose", "tower-pi", "tower-rho"],
    ["classify2", "class2-b"],
    ["paper-examples"],
    ["fixtures"],
]


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a))
def test_json_output_is_byte_identical_across_runs(capsys, argv):
    outs = [run(capsys, *argv, "--json")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    rep = json.loads(outs[0])
    assert set(rep) == {"command", "inputs", "results", "exit_code"}
    assert outs[0] == json.dumps(rep, sort_keys=True) + "\n"


def test_module_entry_point_subprocess():
    argv = [sys.executable, "-m", "homlie", "validate", "tower-K", "--json"]
    a = subprocess.run(argv, capture_output=True, check=False)
    b = subprocess.run(argv, capture_output=True, check=False)
    assert a.returncode == 0 and a.stdout == b.stdout
    bad = subprocess.run([sys.executable, "-m", "homlie", "validate", "nope"], capture_output=True, check=False)
    assert bad.returncode == 3 and b"nope" in bad.stderr
