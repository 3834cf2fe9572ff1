import json
import shutil
import subprocess

import jsonschema
import pytest

from twistalg import verify
from twistalg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out), out


# -- verify --------------------------------------------------------------------------------------


def test_verify_all(capsys):
    code, report, raw = run_json(capsys, "verify")
    jsonschema.validate(report, verify.REPORT_SCHEMA)
    assert len(report["checks"]) >= 15
    failing = [c["name"] for c in report["checks"] if c["status"] == "fail"]
    # the stated minimal polynomial of gamma does not match the computed one
    assert failing == ["gamma-minpoly"]
    assert not report["overall"] and code == 1
    assert all(c["anchor"] for c in report["checks"])


def test_verify_not_isom(capsys):
    code, report, _ = run_json(capsys, "verify", "not-isom")
    assert code == 0 and report["overall"]
    assert report["checks"][0]["details"].startswith("c=1: 8/8")


def test_verify_gamma_minpoly_reports_computed_polynomial(capsys):
    code, report, _ = run_json(capsys, "verify", "gamma-minpoly")
    assert code == 1
    assert "(T - 1) * (T**2 + 1)" in report["checks"][0]["details"]


def test_verify_unknown_name(capsys):
    code, _, err = run(capsys, "verify", "bogus-name")
    assert code == 2 and "unknown check" in err


def test_verify_caps_skip(capsys):
    code, report, _ = run_json(capsys, "verify", "restricted-dims", "--cap-dim", "10")
    assert report["checks"][0]["status"] == "skipped"
    assert report["overall"] and code == 0


def test_verify_deterministic(capsys):
    a = run(capsys, "verify", "trace-invariance", "--json")[1]
    b = run(capsys, "verify", "trace-invariance", "--json")[1]
    assert a == b


def test_verify_with_triple(capsys):
    code, report, _ = run_json(capsys, "verify", "coinvariant-regular", "--m", "4", "--p", "4", "--n", "2")
    assert code == 0 and "G(4,4,2)" in report["checks"][0]["details"]


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and len(out.splitlines()) == len(verify.REGISTRY)


def test_verify_schema_rejects_bad_status():
    bad = {"checks": [{"name": "x", "anchor": "y", "status": "maybe", "details": ""}], "overall": True}
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(bad, verify.REPORT_SCHEMA)


# -- characters ---------------------------------------------------------------------------------------


def test_characters_b1(capsys):
    code, data, _ = run_json(capsys, "characters", "--group", "B", "--n", "1")
    assert code == 0 and len(data["characters"]) == 2


def test_characters_b2_j1(capsys):
    code, data, _ = run_json(capsys, "characters", "--group", "B", "--n", "2", "--twist", "j1")
    moved = {r["label"]: r["image"] for r in data["twist"]["labels"] if r["label"] != r["image"]}
    assert moved == {"((),(2))": "((),(1,1))", "((),(1,1))": "((),(2))"}
    assert code == 0


def test_characters_b2_jminusi_matches_j1(capsys):
    _, a, _ = run_json(capsys, "characters", "--group", "B", "--n", "2", "--twist", "j1")
    _, b, _ = run_json(capsys, "characters", "--group", "B", "--n", "2", "--twist", "jminusi")
    assert a["twist"]["labels"] == b["twist"]["labels"]


def test_characters_d3_jminusi(capsys):
    code, data, _ = run_json(capsys, "characters", "--group", "D", "--n", "3", "--twist", "jminusi")
    assert code == 0 and data["twist"]["ok"]
    assert len(data["twist"]["labels"]) == 10
    assert all(r["target"] == "mu(G(2,2,3))" for r in data["twist"]["labels"])


def test_characters_errors(capsys):
    assert run(capsys, "characters", "--group", "muD", "--n", "2", "--twist", "j1")[0] == 2
    assert run(capsys, "characters", "--group", "B", "--n", "9")[0] == 2
    assert run(capsys, "characters", "--group", "Q", "--n", "2")[0] == 2


# -- coinvariants and centres ---------------------------------------------------------------------------


def test_coinvariants_mystic_klein(capsys):
    code, data, _ = run_json(capsys, "coinvariants", "--m", "2", "--p", "2", "--n", "2", "--mystic")
    assert code == 0
    assert data["graded_dims"] == [1, 2, 1] and data["total_dim"] == 4
    assert data["character"] == [4, 0, 0, 0]


def test_coinvariants_caps(capsys):
    assert run(capsys, "coinvariants", "--m", "4", "--p", "1", "--n", "3", "--cap-group", "100")[0] == 2
    assert run(capsys, "coinvariants", "--m", "2", "--p", "1")[0] == 2


def test_center_klein(capsys):
    code, data, _ = run_json(capsys, "center", "--m", "2", "--p", "2", "--n", "2", "--c", "1")
    assert code == 0 and data["center_dim"] == 4 and data["splits_over_Q"]
    assert [e["name"] for e in data["elements"]] == ["z1", "z2"]
    assert all(e["minimal_polynomial"] == "T**2 - 1" for e in data["elements"])


def test_center_rank_one(capsys):
    code, data, _ = run_json(capsys, "center", "--m", "2", "--p", "1", "--n", "1")
    assert data["center_dim"] == 2
    assert data["elements"][0]["element"] == "-t(1;1) + x1*y1"


def test_center_braided_gamma(capsys):
    code, data, _ = run_json(capsys, "center", "--m", "2", "--p", "2", "--n", "2", "--braided")
    assert code == 0 and data["center_dim"] == 4 and not data["splits_over_Q"]
    gamma = data["elements"][0]
    assert gamma["name"] == "gamma" and gamma["central"]
    assert gamma["factors"] == ["(T - 1)", "(T**2 + 1)"]


def test_center_compare(capsys):
    code, data, _ = run_json(capsys, "center", "--m", "2", "--p", "2", "--n", "2", "--compare")
    assert code == 0
    assert [a["splits_over_Q"] for a in data["algebras"]] == [True, False]


def test_center_dim_cap(capsys):
    code, _, err = run(capsys, "center", "--m", "2", "--p", "1", "--n", "2")
    assert code == 2 and "cap-dim" in err


# -- twist -------------------------------------------------------------------------------------------------


def test_twist_j1_sigma(capsys):
    code, data, _ = run_json(capsys, "twist", "J", "sg(1,2;0)", "--m", "2", "--p", "2", "--n", "2", "--mystic")
    assert code == 0
    assert data["output"] == "1/2*s(1,2;0) + 1/2*sg(1,2;0) - 1/2*sg(1,2;1) + 1/2*s(1,2;1)"


def test_twist_j_torus_fixed(capsys):
    # over Q(i) the exponent is read modulo 4, so -1 is t(1;2)
    code, data, _ = run_json(capsys, "twist", "J", "t(1;2)", "--m", "2", "--p", "1", "--n", "2", "--jc=-i")
    assert data["output"] == "t(1;2)"
    assert run(capsys, "twist", "J", "t(1;1)", "--m", "2", "--p", "1", "--n", "2", "--jc=-i")[0] == 2


def test_twist_eta(capsys):
    code, data, _ = run_json(capsys, "twist", "eta", "x2*y1", "--m", "2", "--p", "1", "--n", "2")
    assert code == 0 and data["output"] == "-x2*t(1;1)*y1"


def test_twist_etaphi(capsys):
    code, data, _ = run_json(capsys, "twist", "etaphi", "x2", "--m", "2", "--p", "2", "--n", "2")
    assert data["output"] == "x2*t(1;1)"


def test_twist_errors(capsys):
    assert run(capsys, "twist", "J", "x1", "--m", "2", "--p", "1", "--n", "2")[0] == 2
    assert run(capsys, "twist", "eta", "x1 +", "--m", "2", "--p", "1", "--n", "2")[0] == 2
    assert run(capsys, "twist", "etaphi", "x1", "--m", "3", "--p", "1", "--n", "2")[0] == 2
    assert run(capsys, "twist", "J", "1", "--m", "2", "--p", "1", "--n", "2", "--jc", "0")[0] == 2


def test_no_command(capsys):
    assert run(capsys)[0] == 2


@pytest.mark.skipif(shutil.which("twistalg") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["twistalg", "coinvariants", "--m", "2", "--p", "1", "--n", "1"], capture_output=True, text=True)
    assert res.returncode == 0 and "graded dims [1, 1]" in res.stdout
