import json

import pytest

from modsmirnov import cli
from modsmirnov.roots import Unconverged


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0 and "thm1-2.1" in out and "thm2-2.3" in out
    code, out, _ = run(capsys, "list", "--json")
    data = json.loads(out)
    assert {e["id"] for e in data["entries"]} >= {"cor-2.2", "lemma4-3.3"}
    assert any(l["id"] == "thm1-R1-cor22" for l in data["links"])


def test_eval_example(capsys):
    code, out, _ = run(capsys, "eval", "--poly", "[[1,0],[0,0],[1,0]]", "--op", "smirnov",
                       "--a", "0.5,0")
    assert code == 0
    assert json.loads(out)["coeffs"] == [[-1.0, 0.0], [2.0, 0.0]]


def test_eval_from_file_and_composite(capsys, tmp_path):
    f = tmp_path / "p.json"
    f.write_text("[[0,0],[0,0],[2,0]]")
    code, out, _ = run(capsys, "eval", "--poly", str(f), "--op", "composite", "--a", "0.3",
                       "--R", "2", "--at", "1")
    assert code == 0 and json.loads(out)["modulus"] == pytest.approx(16)


def test_verify_writes_report(capsys, tmp_path):
    out = tmp_path / "r.json"
    csv = tmp_path / "r.csv"
    code, _, err = run(capsys, "verify", "--ineq", "thm1-2.1", "--trials", "20", "--seed", "7",
                       "--out", str(out), "--csv", str(csv))
    assert code == 0 and "PASS" in err
    rep = json.loads(out.read_text())
    assert rep["entries"][0]["passes"] == 20
    assert len(csv.read_text().strip().split("\n")) == 21


def test_verify_config_file(capsys, tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"schema": 1, "entries": ["erdos-lax-1.3"], "trials": 5,
                               "seed": 1, "degree_range": [1, 4]}))
    code, out, _ = run(capsys, "verify", "--config", str(cfg))
    assert code == 0 and json.loads(out)["config"]["degree_range"] == [1, 4]


def test_verify_counterexample_exit(capsys, monkeypatch):
    from modsmirnov import smirnov as sm
    monkeypatch.setattr(sm, "kappa", lambda al, be, R, n: be * (((R + 1) / 2) ** n - al))
    code, _, err = run(capsys, "verify", "--ineq", "thm1-2.1", "--trials", "300",
                       "--degree-max", "2", "--param-law", "boundary", "--quiet")
    assert code == 1 and "FAIL" in err


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "verify", "--ineq", "nope")[0] == 2
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "eval", "--poly", "not-a-file")[0] == 2
    assert run(capsys, "eval", "--poly", "[[1,2,3]]")[0] == 2
    assert run(capsys, "eval", "--poly", "[[1,0]]", "--a", "x,y")[0] == 2
    assert run(capsys, "reduce", "--link", "nope")[0] == 2
    assert run(capsys, "sharpness", "--ineq", "lemma2-zeros")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "verify", "--config", str(bad))[0] == 2
    assert run(capsys, "verify", "--ineq", "thm1-2.1", "--trials", "-3")[0] == 2


def test_numerical_failure_exit(capsys, monkeypatch):
    def boom(*a, **k):
        raise Unconverged("forced")

    monkeypatch.setattr(cli.sm, "modified_smirnov", boom)
    assert run(capsys, "eval", "--poly", "[[1,0],[1,0]]")[0] == 3


def test_verify_errors_exit_3(capsys, monkeypatch):
    from modsmirnov.circle import TolValueUnreachable
    from modsmirnov.harness import campaign

    def boom(*a, **k):
        raise TolValueUnreachable("forced", None)

    monkeypatch.setattr(campaign, "check", boom)
    assert run(capsys, "verify", "--ineq", "thm1-2.1", "--trials", "2", "--quiet")[0] == 3


def test_sharpness_and_reduce(capsys):
    code, out, _ = run(capsys, "sharpness", "--ineq", "thm1-2.1")
    assert code == 0 and json.loads(out)[0]["sharp"]
    code, out, _ = run(capsys, "reduce", "--link", "thm1-a0-rem1,thm1-R1-cor22", "--trials", "5")
    assert code == 0 and all(r["pass"] for r in json.loads(out))


def test_diagnostic_entries_do_not_fail(capsys):
    code, _, err = run(capsys, "verify", "--ineq", "lemma2-zeros", "--trials", "5", "--quiet")
    assert code == 0 and "diagnostic" in err
