"""Random instances that satisfy an entry's hypothesis by construction.

Every trial draws from its own generator,
``PCG64(SeedSequence(seed, spawn_key=(trial, attempt)))``, so any trial can be
replayed without running the ones before it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .. import circle
from ..catalog import Hypothesis, InequalityInstance, get_entry
from ..polynomial import ComplexPolynomial
from ..roots import from_roots
from ..smirnov import phi

DELTA_GEN = 1e-3
PAIR_ROOT_CAP = 0.95
PAIR_SHRINK = 1 - 1e-6
MAX_RETRIES = 100
RNG_ALGORITHM = "numpy PCG64, SeedSequence(seed, spawn_key=(trial, attempt))"
PARAM_LAWS = ("uniform", "boundary")
_LEAD_FLOOR = 1e-8


class RetryExhausted(RuntimeError):
    """No admissible instance after ``MAX_RETRIES`` regenerations."""


@dataclass(frozen=True)
class GeneratorSpec:
    """Hypothesis class, degree range and seed for a stream of instances.

    ``k_range`` bounds the zero radius for the radius-k class.
    ``binomial_share`` is the fraction of no-zeros draws emitted as ``z^n + c``.
    ``param_law`` is ``"uniform"`` (the default law) or ``"boundary"``, which puts
    a, alpha, beta and z on the unit circle and crowds R toward 1; the latter is
    for falsification runs where violations hide near the domain edge.
    """

    hypothesis: Hypothesis
    degree_range: tuple[int, int] = (1, 12)
    seed: int = 0
    delta: float = DELTA_GEN
    k_range: tuple[float, float] = (0.2, 1.0)
    binomial_share: float = 0.125
    param_law: str = "uniform"

    def __post_init__(self):
        if self.param_law not in PARAM_LAWS:
            raise ValueError(f"unknown param_law {self.param_law!r}")
        lo, hi = self.degree_range
        if not 1 <= lo <= hi:
            raise ValueError(f"bad degree range {self.degree_range}")
        if not 0 < self.delta < 0.5:
            raise ValueError("delta must lie in (0, 0.5)")


def trial_rng(seed: int, trial: int, attempt: int = 0) -> np.random.Generator:
    ss = np.random.SeedSequence(seed, spawn_key=(trial, attempt))
    return np.random.Generator(np.random.PCG64(ss))


def disk_point(rng: np.random.Generator, radius: float = 1.0) -> complex:
    """Uniform by area in the closed disk of the given radius."""
    return complex(radius * np.sqrt(rng.random()) * np.exp(2j * np.pi * rng.random()))


def disk_roots(rng: np.random.Generator, n: int, scale: float) -> np.ndarray:
    u, th = rng.random(n), rng.random(n)
    return scale * np.sqrt(u) * np.exp(2j * np.pi * th)


def _unit(rng: np.random.Generator) -> complex:
    return complex(np.exp(2j * np.pi * rng.random()))


def _well_scaled(p: ComplexPolynomial, n: int) -> bool:
    c = p.coeffs
    return p.degree == n and abs(c[-1]) >= _LEAD_FLOOR * np.abs(c).max()


def closed_disk_poly(rng, n: int, delta: float = DELTA_GEN, k: float = 1.0) -> ComplexPolynomial:
    return from_roots(disk_roots(rng, n, k * (1 - delta)), _unit(rng))


def no_zeros_poly(rng, n: int, delta: float = DELTA_GEN,
                  binomial_share: float = 0.125) -> ComplexPolynomial:
    if rng.random() < binomial_share:
        c = np.zeros(n + 1, dtype=np.complex128)
        c[n] = _unit(rng)
        c[0] = (1 + delta + 2 * rng.random()) * _unit(rng)
        return ComplexPolynomial(c)
    # zeros mapped r -> 1/conj(r), i.e. the conjugate reciprocal of a closed-disk draw
    return closed_disk_poly(rng, n, delta).conjugate_reciprocal(n)


def unrestricted_poly(rng, n: int) -> ComplexPolynomial:
    c = rng.standard_normal(n + 1) + 1j * rng.standard_normal(n + 1)
    c[n] = _unit(rng) * (0.5 + rng.random())
    return ComplexPolynomial(c)


def dominated_pair(rng, n: int) -> tuple[ComplexPolynomial, ComplexPolynomial]:
    """(P, F) with F's zeros of modulus <= 0.95 and |P| < |F| on the circle."""
    f = from_roots(disk_roots(rng, n, PAIR_ROOT_CAP), _unit(rng))
    deg_p = int(rng.integers(0, n + 1))
    c = rng.standard_normal(deg_p + 1) + 1j * rng.standard_normal(deg_p + 1)
    p = ComplexPolynomial(c)
    ratio, _ = circle.max_ratio(p, f)
    return p * (PAIR_SHRINK / ratio), f


def _sample_params(rng, inst_kw: dict, entry_id: str | None, law: str = "uniform") -> dict:
    if law == "boundary":
        a, alpha, beta = _unit(rng), _unit(rng), _unit(rng)
        R = 1 + 2 * rng.random() ** 3
        radius = 1.0
    else:
        a = disk_point(rng)
        alpha = disk_point(rng)
        beta = disk_point(rng)
        R = 1 + 2 * rng.random()
        radius = np.sqrt(1 + 3 * rng.random())
    z = complex(radius * np.exp(2j * np.pi * rng.random()))
    if entry_id is not None:
        schema = get_entry(entry_id).params
        if schema.z_domain == "unit_circle":
            z = z / abs(z)
        elif schema.z_domain == "none":
            z = 1 + 0j
        if schema.a_domain == "circle":
            a = a / abs(a) if a != 0 else 1 + 0j
        if schema.alpha_domain == "omega":
            # t uniform in the disk of radius |z|, pushed forward by phi
            t = disk_point(rng, abs(z))
            alpha = phi(t) if t != -1 else 0j
    inst_kw.update(a=a, alpha=alpha, beta=beta, R=R, z=z)
    return inst_kw


def generate(spec: GeneratorSpec, rng: np.random.Generator | None = None,
             entry: str | None = None) -> InequalityInstance:
    """One instance whose polynomial(s) satisfy ``spec.hypothesis`` by construction."""
    if rng is None:
        rng = trial_rng(spec.seed, 0)
    lo, hi = spec.degree_range
    h = spec.hypothesis
    for _ in range(MAX_RETRIES):
        n = int(rng.integers(lo, hi + 1))
        kw: dict = {"entry": entry or "", "n": n}
        if h is Hypothesis.ALL_ZEROS_IN_CLOSED_DISK:
            p = closed_disk_poly(rng, n, spec.delta)
        elif h is Hypothesis.NO_ZEROS_IN_OPEN_DISK:
            p = no_zeros_poly(rng, n, spec.delta, spec.binomial_share)
        elif h is Hypothesis.ZEROS_IN_RADIUS_K:
            k = float(spec.k_range[0] + (spec.k_range[1] - spec.k_range[0]) * rng.random())
            p = closed_disk_poly(rng, n, spec.delta, k)
            kw["k"] = k
        elif h is Hypothesis.DOMINATED_PAIR:
            p, f = dominated_pair(rng, n)
            # the shrink margin can fall below what the certificate resolves
            if f.degree != n or circle.dominance_margin(p, f)[0] < 0:
                continue
            kw["f"] = f
        else:
            p = unrestricted_poly(rng, n)
        if h is not Hypothesis.DOMINATED_PAIR and not _well_scaled(p, n):
            continue
        kw["p"] = p
        return InequalityInstance(**_sample_params(rng, kw, entry, spec.param_law))
    raise RetryExhausted(f"no admissible {h.value} instance after {MAX_RETRIES} draws")


def generate_many(spec: GeneratorSpec, count: int, entry: str | None = None,
                  attempt: int = 0) -> Iterator[InequalityInstance]:
    for i in range(count):
        yield generate(spec, trial_rng(spec.seed, i, attempt), entry)
