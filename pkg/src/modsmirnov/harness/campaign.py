"""Randomized verification campaigns over catalog entries.

Trials are independent: trial ``i`` draws from its own generator, so the
outcome does not depend on the size or order of the work pool.  The first
failing trial (in trial order) is shrunk to a locally minimal counterexample.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .. import __version__
from ..catalog import (
    EPS_SLACK,
    EXTREMA_TOL,
    Hypothesis,
    HypothesisViolated,
    InequalityInstance,
    REGISTRY,
    Verdict,
    check,
    get_entry,
    sharpness_scan,
    LINKS,
    reduction_check,
)
from ..circle import TolValueUnreachable
from ..roots import Unconverged, find_roots, from_roots
from .generators import MAX_RETRIES, RNG_ALGORITHM, GeneratorSpec, generate, trial_rng

THREADS_ENV = "SMIRNOV_THREADS"
MAX_SHRINK_STEPS = 200


@dataclass(frozen=True)
class CampaignConfig:
    entries: tuple[str, ...]
    trials: int = 1000
    seed: int = 0
    degree_range: tuple[int, int] = (1, 12)
    tol: float = EXTREMA_TOL
    eps: float = EPS_SLACK
    sharpness: bool = False
    reductions: bool = False
    reduction_trials: int = 200
    record_trials: bool = False
    param_law: str = "uniform"
    output: str | None = None

    def __post_init__(self):
        if self.trials < 0:
            raise ValueError("trials must be non-negative")
        for e in self.entries:
            get_entry(e)

    @classmethod
    def from_dict(cls, d: dict) -> "CampaignConfig":
        if d.get("schema", 1) != 1:
            raise ValueError(f"unsupported config schema {d.get('schema')!r}")
        entries = d.get("entries") or d.get("entry")
        if isinstance(entries, str):
            entries = [entries]
        if not entries:
            raise ValueError("config names no entries")
        if list(entries) == ["all"]:
            entries = list(REGISTRY)
        tol = d.get("tolerances", {})
        deg = d.get("degree_range", [1, 12])
        return cls(entries=tuple(entries), trials=int(d.get("trials", 1000)),
                   seed=int(d.get("seed", 0)), degree_range=(int(deg[0]), int(deg[1])),
                   tol=float(tol.get("extrema", EXTREMA_TOL)),
                   eps=float(tol.get("slack", EPS_SLACK)),
                   sharpness=bool(d.get("sharpness", False)),
                   reductions=bool(d.get("reductions", False)),
                   reduction_trials=int(d.get("reduction_trials", 200)),
                   record_trials=bool(d.get("record_trials", False)),
                   param_law=str(d.get("param_law", "uniform")),
                   output=d.get("output"))

    def to_dict(self) -> dict:
        return {"schema": 1, "entries": list(self.entries), "trials": self.trials,
                "seed": self.seed, "degree_range": list(self.degree_range),
                "tolerances": {"extrema": self.tol, "slack": self.eps},
                "sharpness": self.sharpness, "reductions": self.reductions,
                "reduction_trials": self.reduction_trials, "param_law": self.param_law}


@dataclass
class TrialRecord:
    trial: int
    attempts: int
    instance: InequalityInstance | None
    verdict: Verdict | None
    error: str | None = None


@dataclass
class EntryReport:
    entry: str
    instances: int = 0
    passes: int = 0
    failures: int = 0
    regenerations: int = 0
    errors: int = 0
    min_slack: float | None = None
    min_relative_slack: float | None = None
    first_failure: dict | None = None
    counterexample: dict | None = None
    shrink_steps: int = 0
    sharpness: dict | None = None
    reductions: list = field(default_factory=list)
    error_kinds: dict = field(default_factory=dict)
    diagnostic: bool = False
    requested: int = 0
    rows: list = field(default_factory=list, repr=False)

    @property
    def attempts(self) -> int:
        return self.passes + self.failures + self.regenerations + self.errors

    @property
    def ok(self) -> bool:
        links_ok = all(r.get("pass", False) for r in self.reductions)
        return self.failures == 0 and links_ok

    def to_dict(self) -> dict:
        out = {"entry": self.entry, "trials": self.requested, "attempts": self.attempts,
               "instances": self.instances, "passes": self.passes,
               "failures": self.failures, "regenerations": self.regenerations,
               "errors": self.errors, "min_slack": self.min_slack,
               "min_relative_slack": self.min_relative_slack,
               "first_failure": self.first_failure, "counterexample": self.counterexample,
               "shrink_steps": self.shrink_steps, "sharpness": self.sharpness,
               "reductions": self.reductions, "error_kinds": self.error_kinds,
               "diagnostic": self.diagnostic}
        return out


@dataclass
class CampaignReport:
    config: CampaignConfig
    entries: list[EntryReport]
    version: str = __version__
    rng: str = RNG_ALGORITHM
    wall_time: float | None = None

    @property
    def failures(self) -> int:
        return sum(e.failures for e in self.entries if not e.diagnostic) + sum(
            1 for e in self.entries if not e.diagnostic
            for r in e.reductions if not r.get("pass", False))

    @property
    def errors(self) -> int:
        return sum(e.errors for e in self.entries if not e.diagnostic)

    def to_dict(self) -> dict:
        out = {"schema": 1, "tool": "modsmirnov", "version": self.version, "rng": self.rng,
               "seed": self.config.seed, "config": self.config.to_dict(),
               "entries": [e.to_dict() for e in self.entries],
               "summary": {"failures": self.failures, "errors": self.errors,
                           "instances": sum(e.instances for e in self.entries)}}
        if self.wall_time is not None:
            out["wall_time"] = self.wall_time
        return out


def pool_size() -> int:
    """Worker count: ``SMIRNOV_THREADS`` if set, capped by the CPU count."""
    try:
        cpus = len(os.sched_getaffinity(0))
    except AttributeError:  # not available on every platform
        cpus = os.cpu_count() or 1
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return cpus
    try:
        val = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    return max(1, min(val, cpus)) if val > 0 else 1


def run_trial(entry_id: str, spec: GeneratorSpec, trial: int, tol: float = EXTREMA_TOL,
              eps: float = EPS_SLACK) -> TrialRecord:
    """One trial: regenerate on hypothesis or root-finder trouble, then check."""
    for attempt in range(MAX_RETRIES):
        inst = generate(spec, trial_rng(spec.seed, trial, attempt), entry_id)
        try:
            v = check(inst, tol=tol, eps=eps)
        except (HypothesisViolated, Unconverged):
            continue
        except TolValueUnreachable as exc:
            return TrialRecord(trial, attempt + 1, inst, None, f"TolValueUnreachable: {exc}")
        return TrialRecord(trial, attempt + 1, inst, v)
    return TrialRecord(trial, MAX_RETRIES, None, None, "RetryExhausted")


def _still_fails(inst: InequalityInstance, tol: float, eps: float) -> Verdict | None:
    try:
        v = check(inst, tol=tol, eps=eps)
    except (HypothesisViolated, Unconverged, TolValueUnreachable, ValueError):
        return None
    return None if v.passed else v


def _shrink_candidates(inst: InequalityInstance):
    """Simpler neighbours of a failing instance, most aggressive first."""
    entry = get_entry(inst.entry)
    h = entry.hypothesis
    p = inst.p
    if h is not Hypothesis.DOMINATED_PAIR and p.degree >= 2:
        try:
            r = find_roots(p).roots
        except Unconverged:
            r = None
        if r is not None:
            order = np.argsort(np.abs(r))
            keep = r[order[: (len(r) + 1) // 2]] if h is not Hypothesis.NO_ZEROS_IN_OPEN_DISK \
                else r[order[len(r) // 2:]]
            yield inst.replace(p=from_roots(keep, p.leading), n=len(keep))
            if h is Hypothesis.ALL_ZEROS_IN_CLOSED_DISK or h is Hypothesis.ZEROS_IN_RADIUS_K:
                yield inst.replace(p=from_roots(r * 0.5, p.leading))
            elif h is Hypothesis.NO_ZEROS_IN_OPEN_DISK:
                yield inst.replace(p=from_roots(r * 2.0, p.leading))
    if inst.beta != 0:
        yield inst.replace(beta=0)
        yield inst.replace(beta=inst.beta / 2)
    if inst.alpha != 0:
        yield inst.replace(alpha=0)
        yield inst.replace(alpha=inst.alpha / 2)
    if inst.R > 1:
        yield inst.replace(R=1.0)
        yield inst.replace(R=1 + (inst.R - 1) / 2)


def shrink(inst: InequalityInstance, tol: float = EXTREMA_TOL, eps: float = EPS_SLACK,
           max_steps: int = MAX_SHRINK_STEPS) -> tuple[InequalityInstance, Verdict | None, int]:
    """Greedy shrinking: accept the first simpler neighbour that still fails."""
    current = inst
    verdict = _still_fails(inst, tol, eps)
    steps = 0
    while steps < max_steps:
        for cand in _shrink_candidates(current):
            v = _still_fails(cand, tol, eps)
            if v is not None:
                current, verdict = cand, v
                steps += 1
                break
        else:
            break
    return current, verdict, steps


def _round(x: float | None) -> float | None:
    if x is None or not math.isfinite(x):
        return None
    return float(x)


def run_entry(entry_id: str, config: CampaignConfig, threads: int | None = None) -> EntryReport:
    entry = get_entry(entry_id)
    spec = GeneratorSpec(entry.hypothesis, config.degree_range, seed=config.seed,
                         param_law=config.param_law)
    threads = pool_size() if threads is None else max(1, threads)
    work = range(config.trials)

    def one(i: int) -> TrialRecord:
        return run_trial(entry_id, spec, i, config.tol, config.eps)

    if threads > 1 and config.trials > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(one, work))
    else:
        records = [one(i) for i in work]

    rep = EntryReport(entry_id, diagnostic=entry.diagnostic, requested=config.trials)
    min_slack = math.inf
    min_rel = math.inf
    first_fail: TrialRecord | None = None
    for rec in records:
        rep.regenerations += rec.attempts - 1
        if rec.verdict is None:
            rep.errors += 1
            kind = (rec.error or "error").split(":")[0]
            rep.error_kinds[kind] = rep.error_kinds.get(kind, 0) + 1
            continue
        rep.instances += 1
        v = rec.verdict
        if v.passed:
            rep.passes += 1
        else:
            rep.failures += 1
            if first_fail is None:
                first_fail = rec
        min_slack = min(min_slack, v.slack)
        min_rel = min(min_rel, v.relative_slack)
        if config.record_trials:
            rep.rows.append({"trial": rec.trial, "attempts": rec.attempts,
                               "instance": rec.instance.to_dict(), "verdict": v.to_dict()})
    rep.min_slack = _round(min_slack)
    rep.min_relative_slack = _round(min_rel)
    if first_fail is not None:
        rep.first_failure = {"trial": first_fail.trial, "instance": first_fail.instance.to_dict(),
                             "verdict": first_fail.verdict.to_dict()}
        small, v, steps = shrink(first_fail.instance, config.tol, config.eps)
        rep.shrink_steps = steps
        rep.counterexample = {"instance": small.to_dict(),
                              "verdict": None if v is None else v.to_dict()}
    if config.sharpness and entry.sharp_family is not None:
        rep.sharpness = sharpness_scan(entry_id).to_dict()
    if config.reductions:
        for link in LINKS.values():
            if link.source == entry_id:
                res = reduction_check(link.id, trials=config.reduction_trials, seed=config.seed,
                                      degree_range=config.degree_range, raise_on_mismatch=False)
                rep.reductions.append(res.to_dict())
    return rep


def run_campaign(config: CampaignConfig | dict, threads: int | None = None,
                 timed: bool = False) -> CampaignReport:
    """Run every configured entry.  Wall time is recorded only when ``timed``."""
    if isinstance(config, dict):
        config = CampaignConfig.from_dict(config)
    t0 = time.perf_counter()
    reports = [run_entry(e, config, threads) for e in config.entries]
    wall = time.perf_counter() - t0 if timed else None
    return CampaignReport(config, reports, wall_time=wall)
