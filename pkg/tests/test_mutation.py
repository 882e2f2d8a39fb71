"""Deliberately broken operators must be caught by a thm1-2.1 campaign."""

import numpy as np
import pytest

from modsmirnov import smirnov as sm
from modsmirnov.harness.campaign import CampaignConfig, run_campaign


def kappa_with_alpha(alpha, beta, R, n):
    return beta * (((R + 1) / 2) ** n - alpha)


def without_na_term(c, a, n):
    # (1 + a z) P' alone; the z**n coefficient a n c_n no longer cancels
    c = np.asarray(c, dtype=np.complex128)
    k = np.arange(len(c))
    out = a * k * c
    out[:-1] += k[1:] * c[1:]
    return out


def _failures(**cfg):
    base = dict(entries=("thm1-2.1",), trials=1000, seed=0)
    base.update(cfg)
    return run_campaign(CampaignConfig(**base), threads=1).entries[0]


def test_kappa_mutation_detected(monkeypatch):
    monkeypatch.setattr(sm, "kappa", kappa_with_alpha)
    e = _failures(degree_range=(1, 3), param_law="boundary")
    assert e.failures >= 1
    alpha = e.first_failure["instance"]["alpha"]
    assert alpha[1] != 0  # the counterexample has complex alpha


def test_dropped_term_detected(monkeypatch):
    monkeypatch.setattr(sm, "smirnov_coeffs", without_na_term)
    e = _failures()
    assert e.failures >= 1


def test_unmutated_baseline_is_clean():
    e = _failures(degree_range=(1, 3), param_law="boundary", trials=300)
    assert e.failures == 0
