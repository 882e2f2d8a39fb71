"""Acceptance criteria 1-10 at full scale.

Each test records one PASS/FAIL line; the lines are printed together at the
end of the pytest run (see ``conftest.py``) and also when this file is run
directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import sys
import time

import numpy as np
import pytest

from modsmirnov import catalog as cat
from modsmirnov import smirnov as sm
from modsmirnov.circle import circle_extrema
from modsmirnov.harness.campaign import CampaignConfig, run_campaign
from modsmirnov.harness.reports import to_json
from modsmirnov.polynomial import ComplexPolynomial
from modsmirnov.roots import find_roots, from_roots

RESULTS: dict[int, str] = {}

CLASSICAL = (
    "bernstein-1.1", "maxmod-1.2", "erdos-lax-1.3", "ankeny-rivlin-1.4",
    "aziz-rather-1.5", "aziz-rather-1.6",
    "aziz-dawood-3", "aziz-dawood-4", "aziz-dawood-5", "aziz-dawood-6",
    "aziz-rather-7", "aziz-rather-8",
    "shah-fatima-1.8", "shah-fatima-1.9", "shah-fatima-1.10", "shah-fatima-1.11",
    "wani-liman-1.12", "wani-liman-1.13", "shah-fatima-9", "shah-fatima-10",
    "dewan-hans-C-1.14", "dewan-hans-D-1.15",
)


def record(num: int, ok: bool, detail: str) -> None:
    RESULTS[num] = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


def summary_lines() -> list[str]:
    return [RESULTS[k] for k in sorted(RESULTS)]


def _campaign(entry: str, trials: int, seed: int = 1, **kw):
    cfg = CampaignConfig(entries=(entry,), trials=trials, seed=seed, **kw)
    return run_campaign(cfg).entries[0]


def test_c01_operator_identity():
    t0 = time.perf_counter()
    rng = np.random.default_rng(101)
    a_vals = np.sqrt(rng.random(100)) * np.exp(2j * np.pi * rng.random(100))
    a_vals[:4] = [1, -1, 1j, 0]
    bad = 0
    for n in range(1, 33):
        expected = np.zeros(n, dtype=np.complex128)
        expected[-1] = n
        for a in a_vals:
            out = sm.modified_smirnov(ComplexPolynomial.monomial(n), a, n).padded(n - 1)
            bad += not np.array_equal(out, expected)
    dt = time.perf_counter() - t0
    ok = bad == 0 and dt < 1.0
    record(1, ok, f"{32 * len(a_vals)} exact monomial identities, mismatches={bad}, {dt:.2f}s")
    assert ok


def test_c02_theorem1_suite():
    t0 = time.perf_counter()
    e = _campaign("thm1-2.1", 10_000)
    grid = {"a": [0, 0.5, -0.3 + 0.4j, 1j, -1],
            "alpha": [0, 1, -1, 0.5j, 0.6 - 0.3j],
            "beta": [0, 1, -1, 0.5j, 0.6 - 0.3j],
            "R": [1, 1.5, 2, 3], "theta": [0, 2.2], "radius": [1]}
    scan = cat.sharpness_scan("thm1-2.1", n=3, family_params={"lam": 2.0}, grid=grid)
    dt = time.perf_counter() - t0
    ok = (e.passes == 10_000 and e.failures == 0 and e.min_relative_slack >= -1e-8
          and scan.gaps.size >= 1000 and scan.max_gap <= 1e-8 and dt < 60)
    record(2, ok, f"passes={e.passes}/10000 min_rel_slack={e.min_relative_slack:.2e}; "
                  f"lambda z^n gap<= {scan.max_gap:.1e} over {scan.gaps.size} points; {dt:.1f}s")
    assert ok


def test_c03_theorem2_suite():
    t0 = time.perf_counter()
    e = _campaign("thm2-2.3", 10_000)
    gap = cat.sharpness_gap("thm2-2.3", n=1)
    dt = time.perf_counter() - t0
    ok = e.passes == 10_000 and e.failures == 0 and gap <= 1e-6 and dt < 120
    record(3, ok, f"passes={e.passes}/10000 min_rel_slack={e.min_relative_slack:.2e}; "
                  f"z^n+1 gap={gap:.1e}; {dt:.1f}s")
    assert ok


def test_c04_classical_baselines():
    t0 = time.perf_counter()
    bad = []
    for i, entry in enumerate(CLASSICAL):
        e = _campaign(entry, 1000, seed=40 + i)
        if e.passes != 1000 or e.failures:
            bad.append(f"{entry}:{e.passes}/{e.failures}/{e.errors}")
    gap = cat.sharpness_gap("erdos-lax-1.3", n=4)
    dt = time.perf_counter() - t0
    ok = not bad and gap <= 1e-6
    record(4, ok, f"{len(CLASSICAL)} entries x 1000, bad={bad or 'none'}; "
                  f"Erdos-Lax family gap={gap:.1e}; {dt:.1f}s")
    assert ok


def test_c05_reduction_links():
    t0 = time.perf_counter()
    bad, worst, min_order = [], 0.0, np.inf
    for lid, link in cat.LINKS.items():
        res = cat.reduction_check(lid, trials=1000, seed=5, raise_on_mismatch=False)
        if not res.passed:
            bad.append(lid)
        if link.limit:
            min_order = min(min_order, res.min_order)
        else:
            worst = max(worst, res.max_rel_diff)
    dt = time.perf_counter() - t0
    ok = not bad and worst <= 1e-8 and min_order >= 0.9
    record(5, ok, f"{len(cat.LINKS)} links x 1000, max rel diff={worst:.1e}, "
                  f"min limit order={min_order:.3f}, failing={bad or 'none'}; {dt:.1f}s")
    assert ok


def _sweep_resolution(c: np.ndarray, m_lower: float, samples: int) -> tuple[float, float]:
    """How far a uniform sweep's max and min can sit inside the true extrema.

    Nearest sample is within d = pi/N of the extremum.  At a maximum the loss
    is second order, D2 d^2 / 2.  At a minimum P' is orthogonal to P, so the
    loss is at most min(D1 d, D1^2 d^2 / (2 m)) + D2 d^2 / 2.
    """
    k = np.arange(len(c))
    d = np.pi / samples
    d1 = float(np.sum(k * np.abs(c)))
    d2 = float(np.sum(k * k * np.abs(c)))
    at_max = d2 * d * d / 2
    first = d1 * d if m_lower <= 0 else min(d1 * d, d1 * d1 * d * d / (2 * m_lower))
    return at_max, first + at_max


def test_c06_circle_oracle():
    t0 = time.perf_counter()
    rng = np.random.default_rng(606)
    N = 1_000_000
    w = np.exp(2j * np.pi * np.arange(N) / N)
    bad = 0
    for _ in range(200):
        n = int(rng.integers(1, 13))
        c = rng.standard_normal(n + 1) + 1j * rng.standard_normal(n + 1)
        p = ComplexPolynomial(c)
        mx, mn = circle_extrema(p)
        v = np.abs(p(w))
        res_max, res_min = _sweep_resolution(c, mn.lower, N)
        # rigorous side: no sample beats the certified bounds
        bad += not (v.max() <= mx.upper and v.min() >= mn.lower)
        # agreement: the gap is covered by the certificate plus the sweep's resolution
        bad += not (mx.value - v.max() <= mx.error_bound + res_max)
        bad += not (v.min() - mn.value <= mn.error_bound + res_min)
    mx, mn = circle_extrema(ComplexPolynomial([1, 0, 1]))
    exact = abs(mx.value - 2) <= 1e-8 and abs(mn.value) <= 1e-8
    dt = time.perf_counter() - t0
    ok = bad == 0 and exact and dt < 60
    record(6, ok, f"200 polynomials vs 10^6 samples, outside bound={bad}; "
                  f"z^2+1 -> ({mx.value:.10f}, {mn.value:.1e}); {dt:.1f}s")
    assert ok


def test_c07_root_finder():
    rng = np.random.default_rng(707)
    worst = worst_vieta = 0.0
    for _ in range(500):
        n = int(rng.integers(1, 13))
        while True:
            r = (0.1 + 1.9 * rng.random(n)) * np.exp(2j * np.pi * rng.random(n))
            gaps = np.abs(r[:, None] - r[None, :]) + 10 * np.eye(n)
            if gaps.min() >= 0.05:
                break
        lead = np.exp(2j * np.pi * rng.random())
        p = from_roots(r, lead)
        found = list(find_roots(p).roots)
        for t in r:
            d = np.abs(np.asarray(found) - t)
            worst = max(worst, d.min())
            found.pop(int(d.argmin()))
        prod = np.prod(np.abs(find_roots(p).roots))
        vieta = abs(p.coeffs[0] / p.coeffs[-1])
        worst_vieta = max(worst_vieta, abs(prod - vieta) / vieta)
    ok = worst <= 1e-8 and worst_vieta <= 1e-8
    record(7, ok, f"500 round trips, max root error={worst:.1e}, Vieta rel={worst_vieta:.1e}")
    assert ok


def test_c08_lemma_suites():
    rng = np.random.default_rng(808)
    w = np.exp(2j * np.pi * rng.random(256))
    lemma1_bad = 0
    for _ in range(200):
        n = int(rng.integers(1, 13))
        k = 0.2 + 0.8 * rng.random()
        r = k * np.sqrt(rng.random(n)) * np.exp(2j * np.pi * rng.random(n))
        p = from_roots(r, np.exp(2j * np.pi * rng.random()))
        for R in (1.5, 2.0, 3.0):
            lhs = np.abs(p(R * w))
            rhs = ((R + k) / (1 + k)) ** n * np.abs(p(w))
            lemma1_bad += int(np.sum(lhs < rhs * (1 - 1e-8)))
    e3 = _campaign("lemma3-3.2", 1000, seed=83)
    e4 = _campaign("lemma4-3.3", 1000, seed=84)
    ok = lemma1_bad == 0 and e3.passes == 1000 and e4.passes == 1000
    record(8, ok, f"Lemma 1 violations={lemma1_bad} over 153600 checks; "
                  f"Lemma 3 {e3.passes}/1000; Lemma 4 {e4.passes}/1000")
    assert ok


def _kappa_with_alpha(alpha, beta, R, n):
    return beta * (((R + 1) / 2) ** n - alpha)


def _without_na_term(c, a, n):
    c = np.asarray(c, dtype=np.complex128)
    k = np.arange(len(c))
    out = a * k * c
    out[:-1] += k[1:] * c[1:]
    return out


def test_c09_mutation_sensitivity(monkeypatch):
    kw = dict(degree_range=(1, 3), param_law="boundary")
    with monkeypatch.context() as m:
        m.setattr(sm, "kappa", _kappa_with_alpha)
        ek = _campaign("thm1-2.1", 1000, seed=0, **kw)
    with monkeypatch.context() as m:
        m.setattr(sm, "smirnov_coeffs", _without_na_term)
        ed = _campaign("thm1-2.1", 1000, seed=0, **kw)
    complex_alpha = ek.first_failure is not None and ek.first_failure["instance"]["alpha"][1] != 0
    ok = ek.failures >= 1 and ed.failures >= 1 and complex_alpha
    record(9, ok, f"kappa mutant: {ek.failures} counterexamples; "
                  f"dropped -naP mutant: {ed.failures} counterexamples (1000 trials each)")
    assert ok


def test_c10_determinism():
    cfg = CampaignConfig(entries=("thm1-2.1", "thm2-2.3", "bernstein-thmA"), trials=200,
                         seed=2024, sharpness=True)
    a = to_json(run_campaign(cfg, threads=1))
    b = to_json(run_campaign(cfg, threads=4))
    ok = a == b
    record(10, ok, f"two runs, {len(a)} bytes each, identical={ok}")
    assert ok


if __name__ == "__main__":
    code = pytest.main([__file__, "-q", "-p", "no:cacheprovider"])
    sys.exit(code)
