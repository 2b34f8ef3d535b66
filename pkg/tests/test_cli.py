import json

import pytest

from tparadox.cli import main
from tparadox.proofs import bundled_dir

ZOO = str(bundled_dir() / "zoo.defs")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_model_json_report(capsys):
    code, out, _ = run(capsys, "model", "--defs", ZOO, "--domain", "40", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert list(report) == ["variant", "stages", "classifications", "ranks", "invariants", "proofs", "config"]
    assert report["classifications"]["lam"] == "Paradoxical(1)"
    assert report["ranks"]["lam_and_true"] == 2
    assert all(report["invariants"].values())
    assert report["config"]["domain"] == 40


def test_reports_are_deterministic(capsys, tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"r{i}.json"
        assert run(capsys, "model", "--defs", ZOO, "--domain", "30", "--format", "json", "--out", str(path))[0] == 0
        outs.append(path.read_text())
    assert outs[0] == outs[1]


def test_empty_definitions(capsys, tmp_path):
    empty = tmp_path / "empty.defs"
    empty.write_text("")
    code, out, _ = run(capsys, "model", "--defs", str(empty), "--format", "json")
    report = json.loads(out)
    assert code == 0
    assert report["config"]["fixed_point"] <= 1
    assert report["classifications"] == {}


def test_tp_plus_report(capsys):
    code, out, _ = run(capsys, "model", "--defs", ZOO, "--domain", "40", "--variant", "tp-plus", "--format", "json")
    report = json.loads(out)
    assert code == 0 and report["variant"] == "tp-plus"
    assert report["invariants"]["axiom_audit"]


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--defs", ZOO, "--domain", "30", "lam", "gamma",
                       "--sentence", "lam | 0 = 0", "--sentence", "T(quote(rho))")
    assert code == 0
    assert out.splitlines() == ["lam: Paradoxical(1)", "gamma: Independent",
                                "lam | 0 = 0: True", "T(quote(rho)): Independent"]


def test_check_bundled_proofs(capsys):
    code, out, _ = run(capsys, "check", "--bundled", "--domain", "40", "--format", "json")
    assert code == 1                       # the broken and negative-control proofs fail
    results = {p["name"]: p for p in json.loads(out)["proofs"]}
    for name in ("p_not_pp", "not_p_not_pp", "tlem_rule_lam", "p_neg_atomic"):
        assert results[name]["accepted"] and results[name]["cross_valid"] is True
    assert results["broken_eigenvariable"]["errors"][0]["node"] == "root"
    assert not results["negative_control"]["accepted"]


def test_check_single_proof_passes(capsys):
    code, out, _ = run(capsys, "check", str(bundled_dir() / "p_not_pp.json"), "--domain", "40")
    assert code == 0
    assert "accepted, cross-valid=true" in out


def test_negative_control_with_flag(capsys):
    code, out, _ = run(capsys, "check", str(bundled_dir() / "negative_control.json"), "--domain", "40",
                       "--allow-extra-axiom")
    assert code == 1
    assert "accepted, cross-valid=false" in out


def test_zoo_command(capsys, tmp_path):
    emitted = tmp_path / "zoo.defs"
    code, out, _ = run(capsys, "zoo", "--domain", "40", "--mcgee-k", "5", "--emit", str(emitted),
                       "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["config"]["expected_mismatches"] == {}
    assert report["config"]["mcgee_k"] == 5
    assert "mu_T5 := T(quote(mu_T4))" in emitted.read_text()


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", "--defs", ZOO, "--domain", "30")
    assert code == 0
    assert "no classification differs" in out


def test_errors_exit_with_two(capsys, tmp_path):
    bad = tmp_path / "bad.defs"
    bad.write_text("lam := ~T(\n")
    code, _, err = run(capsys, "model", "--defs", str(bad))
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "model", "--defs", str(tmp_path / "missing.defs"))
    assert code == 2
    code, _, err = run(capsys, "classify", "--defs", ZOO, "--domain", "30", "nobody")
    assert code == 2
    code, _, err = run(capsys, "check")
    assert code == 2


def test_usage_errors():
    with pytest.raises(SystemExit):
        main(["model"])
    with pytest.raises(SystemExit):
        main(["zoo", "--variant", "kf"])
