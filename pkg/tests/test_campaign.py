import json

import pytest

from modsmirnov import smirnov as sm
from modsmirnov.catalog import InequalityInstance, check
from modsmirnov.harness import campaign as cp
from modsmirnov.harness.campaign import CampaignConfig, run_campaign, shrink
from modsmirnov.harness.reports import CSV_COLUMNS, to_csv, to_json
from modsmirnov.roots import from_roots


def _mutated_kappa(alpha, beta, R, n):
    return beta * (((R + 1) / 2) ** n - alpha)


def test_small_campaign_accounting():
    cfg = CampaignConfig(entries=("thm1-2.1", "thm2-2.3", "bernstein-thmA"), trials=40, seed=3)
    rep = run_campaign(cfg, threads=2)
    for e in rep.entries:
        assert e.failures == 0 and e.errors == 0
        assert e.passes + e.failures + e.errors == e.requested == 40
        assert e.attempts == e.requested + e.regenerations
        assert e.min_slack is not None and e.min_slack >= -1e-8
    assert rep.failures == 0


def test_report_is_deterministic_across_pool_sizes():
    cfg = CampaignConfig(entries=("thm2-2.3", "lemma4-3.3"), trials=30, seed=11)
    a = to_json(run_campaign(cfg, threads=1))
    b = to_json(run_campaign(cfg, threads=3))
    assert a == b
    d = json.loads(a)
    assert d["schema"] == 1 and d["seed"] == 11 and "wall_time" not in d
    assert d["rng"].startswith("numpy PCG64")


def test_timed_report_has_wall_time():
    rep = run_campaign(CampaignConfig(entries=("bernstein-1.1",), trials=3), timed=True)
    assert json.loads(to_json(rep))["wall_time"] >= 0


def test_config_from_dict():
    cfg = CampaignConfig.from_dict({"schema": 1, "entries": ["thm1-2.1"], "trials": 5,
                                    "seed": 2, "degree_range": [2, 4],
                                    "tolerances": {"extrema": 1e-9, "slack": 1e-8}})
    assert cfg.degree_range == (2, 4) and cfg.tol == 1e-9
    assert CampaignConfig.from_dict({"entry": "thm1-2.1"}).entries == ("thm1-2.1",)
    assert len(CampaignConfig.from_dict({"entries": ["all"]}).entries) > 30
    for bad in ({"schema": 2, "entries": ["thm1-2.1"]}, {"entries": []},
                {"entries": ["thm1-2.1"], "trials": -1}):
        with pytest.raises(ValueError):
            CampaignConfig.from_dict(bad)
    with pytest.raises(KeyError):
        CampaignConfig.from_dict({"entries": ["nope"]})


def test_csv_rows():
    cfg = CampaignConfig(entries=("thm1-2.1",), trials=4, seed=1, record_trials=True)
    text = to_csv(run_campaign(cfg, threads=1))
    lines = text.strip().split("\n")
    assert lines[0].split(",") == list(CSV_COLUMNS)
    assert len(lines) == 5
    assert lines[1].startswith("thm1-2.1,0,")


def test_pool_size_env(monkeypatch):
    monkeypatch.setenv(cp.THREADS_ENV, "1")
    assert cp.pool_size() == 1
    monkeypatch.setenv(cp.THREADS_ENV, "100000")
    assert 1 <= cp.pool_size() <= 100000
    monkeypatch.setenv(cp.THREADS_ENV, "0")
    assert cp.pool_size() == 1
    monkeypatch.setenv(cp.THREADS_ENV, "many")
    with pytest.raises(ValueError):
        cp.pool_size()
    monkeypatch.delenv(cp.THREADS_ENV)
    assert cp.pool_size() >= 1


def test_failures_are_shrunk(monkeypatch):
    monkeypatch.setattr(sm, "kappa", _mutated_kappa)
    cfg = CampaignConfig(entries=("thm1-2.1",), trials=400, seed=0, degree_range=(1, 3),
                         param_law="boundary")
    rep = run_campaign(cfg, threads=1)
    e = rep.entries[0]
    assert e.failures >= 1 and rep.failures >= 1
    ce = InequalityInstance.from_dict(e.counterexample["instance"])
    assert not check(ce).passed
    first = InequalityInstance.from_dict(e.first_failure["instance"])
    assert ce.degree_class <= first.degree_class


def test_shrink_keeps_failing_only(monkeypatch):
    monkeypatch.setattr(sm, "kappa", _mutated_kappa)
    p = from_roots([-0.87 + 0.02j])
    inst = InequalityInstance("thm1-2.1", from_roots([0.3 + 0.4j, -0.5]),
                              a=-1, alpha=1j, beta=0.6 - 0.8j, R=1.2, z=1.0)
    small, verdict, steps = shrink(inst)
    if verdict is not None:
        assert not verdict.passed
        assert not check(small).passed
    # a passing instance never moves
    monkeypatch.setattr(sm, "kappa", lambda *a: 0.0)
    ok = InequalityInstance("thm1-2.1", p, R=2.0)
    assert shrink(ok)[2] == 0


def test_sharpness_and_reductions_requested():
    cfg = CampaignConfig(entries=("thm2-2.3",), trials=2, sharpness=True, reductions=True,
                         reduction_trials=3, degree_range=(1, 5))
    e = run_campaign(cfg, threads=1).entries[0]
    assert e.sharpness["min_gap"] <= 1e-6
    assert e.reductions and all(r["pass"] for r in e.reductions)


def test_non_convergence_counted_as_error(monkeypatch):
    from modsmirnov.circle import TolValueUnreachable

    def boom(*a, **k):
        raise TolValueUnreachable("forced", None)

    monkeypatch.setattr(cp, "check", boom)
    rep = run_campaign(CampaignConfig(entries=("thm1-2.1",), trials=3), threads=1)
    assert rep.entries[0].errors == 3 and rep.errors == 3
    assert rep.entries[0].error_kinds == {"TolValueUnreachable": 3}
