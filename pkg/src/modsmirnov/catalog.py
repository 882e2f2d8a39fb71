"""Registry of polynomial inequalities as executable predicates.

Each :class:`InequalityEntry` knows its zero-location hypothesis, which of the
free parameters ``(a, alpha, beta, R, z)`` it uses, the direction of the
inequality, a pair of side evaluators, and the extremal family on which it is
known to be sharp.  :func:`check` turns an :class:`InequalityInstance` into a
:class:`Verdict`.

Notation used in the evaluators:

* ``M``, ``m``: certified max and min of ``|P|`` on the unit circle;
* ``s = n |z|**(n-1)``: the closed form of ``|S_a[z**n](z)|``;
* ``A = |R**n - alpha + kappa|`` and ``B = |1 - alpha + kappa|``.

The operator and ``kappa`` are always reached through the :mod:`smirnov`
module namespace, so patching that module affects every entry.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from . import circle as _circle
from . import roots as _roots
from . import smirnov as _sm
from .polynomial import ComplexPolynomial, as_polynomial

EPS_SLACK = 1e-8
EXTREMA_TOL = 1e-8
LINK_RTOL = 1e-8
_DISK_TOL = _sm.DISK_TOL


class HypothesisViolated(ValueError):
    """The instance polynomial does not satisfy the entry's zero-location hypothesis."""


class LinkMismatch(AssertionError):
    """A specialization does not reproduce its target expression."""

    def __init__(self, message: str, instance: dict | None = None):
        super().__init__(message)
        self.instance = instance


class Hypothesis(enum.Enum):
    ALL_ZEROS_IN_CLOSED_DISK = "AllZerosInClosedDisk"
    NO_ZEROS_IN_OPEN_DISK = "NoZerosInOpenDisk"
    ZEROS_IN_RADIUS_K = "ZerosInRadiusK"
    DOMINATED_PAIR = "DominatedPair"
    UNRESTRICTED = "Unrestricted"


class Direction(enum.Enum):
    LE = "<="
    GE = ">="


@dataclass(frozen=True)
class ParamSchema:
    """Which parameters an entry reads and the domain each must lie in.

    ``z_domain`` is ``"exterior"`` (``|z| >= 1``), ``"unit_circle"`` or
    ``"none"`` (the inequality is a statement about circle extrema only).
    ``alpha_domain="omega"`` restricts alpha to the closed region
    ``Omega_{|z|}`` instead of the unit disk.
    """

    uses: tuple[str, ...] = ()
    z_domain: str = "exterior"
    alpha_domain: str = "disk"
    a_domain: str = "disk"

    def validate(self, inst: "InequalityInstance") -> None:
        if "a" in self.uses:
            if abs(inst.a) > 1 + _DISK_TOL:
                raise ValueError(f"|a| = {abs(inst.a):.6g} > 1")
            if self.a_domain == "circle" and abs(abs(inst.a) - 1) > _sm.BOUNDARY_TOL:
                raise ValueError("this entry needs |a| = 1")
        if "alpha" in self.uses:
            if self.alpha_domain == "omega":
                if not _sm.omega_contains(max(abs(inst.z), 1.0), inst.alpha):
                    raise ValueError(f"alpha = {inst.alpha} outside Omega_|z|")
            elif abs(inst.alpha) > 1 + _DISK_TOL:
                raise ValueError(f"|alpha| = {abs(inst.alpha):.6g} > 1")
        if "beta" in self.uses and abs(inst.beta) > 1 + _DISK_TOL:
            raise ValueError(f"|beta| = {abs(inst.beta):.6g} > 1")
        if "R" in self.uses and inst.R < 1:
            raise ValueError(f"R = {inst.R} < 1")
        if self.z_domain == "exterior" and abs(inst.z) < 1 - _DISK_TOL:
            raise ValueError(f"|z| = {abs(inst.z):.6g} < 1")
        if self.z_domain == "unit_circle" and abs(abs(inst.z) - 1) > _DISK_TOL:
            raise ValueError(f"|z| = {abs(inst.z):.6g} is not on the unit circle")

    def to_dict(self) -> dict:
        return {"uses": list(self.uses), "z_domain": self.z_domain,
                "alpha_domain": self.alpha_domain, "a_domain": self.a_domain}


@dataclass(frozen=True)
class InequalityInstance:
    """One point at which an entry is evaluated.

    ``n`` is the degree class (defaults to ``deg P``, or ``deg F`` for pairs);
    ``k`` is the zero radius for the radius-k hypothesis (defaults to the
    computed largest root modulus).
    """

    entry: str
    p: ComplexPolynomial
    a: complex = 0j
    alpha: complex = 0j
    beta: complex = 0j
    R: float = 1.0
    z: complex = 1 + 0j
    f: ComplexPolynomial | None = None
    n: int | None = None
    k: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "p", as_polynomial(self.p))
        if self.f is not None:
            object.__setattr__(self, "f", as_polynomial(self.f))
        for name in ("a", "alpha", "beta", "z"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        object.__setattr__(self, "R", float(self.R))

    @property
    def degree_class(self) -> int:
        if self.n is not None:
            return int(self.n)
        if self.f is not None:
            return max(self.f.degree, self.p.degree)
        return self.p.degree

    def replace(self, **changes) -> "InequalityInstance":
        data = {k: getattr(self, k) for k in
                ("entry", "p", "a", "alpha", "beta", "R", "z", "f", "n", "k")}
        data.update(changes)
        return InequalityInstance(**data)

    def to_dict(self) -> dict:
        def c(v: complex) -> list[float]:
            return [float(v.real), float(v.imag)]

        out = {"entry": self.entry, "p": self.p.to_pairs(), "a": c(self.a),
               "alpha": c(self.alpha), "beta": c(self.beta), "R": self.R, "z": c(self.z),
               "n": self.degree_class}
        if self.f is not None:
            out["f"] = self.f.to_pairs()
        if self.k is not None:
            out["k"] = self.k
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "InequalityInstance":
        def c(v) -> complex:
            return complex(v[0], v[1]) if isinstance(v, (list, tuple)) else complex(v)

        return cls(entry=d["entry"], p=ComplexPolynomial.from_pairs(d["p"]),
                   a=c(d.get("a", 0)), alpha=c(d.get("alpha", 0)), beta=c(d.get("beta", 0)),
                   R=float(d.get("R", 1.0)), z=c(d.get("z", 1)),
                   f=ComplexPolynomial.from_pairs(d["f"]) if "f" in d else None,
                   n=d.get("n"), k=d.get("k"))


@dataclass(frozen=True)
class Verdict:
    entry: str
    direction: Direction
    lhs: float
    rhs: float
    slack: float
    scale: float
    allowance: float
    passed: bool

    @classmethod
    def build(cls, entry: str, direction: Direction, lhs: float, rhs: float,
              allowance: float = 0.0, eps: float = EPS_SLACK) -> "Verdict":
        slack = rhs - lhs if direction is Direction.LE else lhs - rhs
        scale = max(abs(lhs), abs(rhs), 1.0)
        passed = bool(slack >= -(eps * scale + allowance))
        return cls(entry, direction, float(lhs), float(rhs), float(slack), float(scale),
                   float(allowance), passed)

    @property
    def relative_slack(self) -> float:
        return self.slack / self.scale

    def to_dict(self) -> dict:
        return {"entry": self.entry, "direction": self.direction.value, "lhs": self.lhs,
                "rhs": self.rhs, "slack": self.slack, "scale": self.scale,
                "allowance": self.allowance, "pass": self.passed}


# ---------------------------------------------------------------------------
# evaluation context


class _Ctx:
    """Lazily computed quantities shared by the side evaluators of one instance."""

    def __init__(self, inst: InequalityInstance, tol: float):
        self.inst = inst
        self.p = inst.p
        self.n = inst.degree_class
        self.a, self.alpha, self.beta = inst.a, inst.alpha, inst.beta
        self.R, self.z = inst.R, inst.z
        self.tol = tol
        self._cache: dict = {}
        self.loose = False

    def _get(self, key: str, make):
        if key not in self._cache:
            ext = make()
            if not ext.converged:
                self.loose = True
            self._cache[key] = ext
        return self._cache[key]

    def max_of(self, poly, key) -> tuple[float, float]:
        mx = self._get(key + ":max", lambda: _circle.certified_max_modulus(poly, self.tol))
        return mx.value, mx.error_bound

    def min_of(self, poly, key) -> tuple[float, float]:
        mn = self._get(key + ":min", lambda: _circle.certified_min_modulus(poly, self.tol))
        return mn.value, mn.error_bound

    @property
    def M(self) -> tuple[float, float]:
        return self.max_of(self.p, "p")

    @property
    def m(self) -> tuple[float, float]:
        return self.min_of(self.p, "p")

    @property
    def s(self) -> float:
        return self.n * abs(self.z) ** (self.n - 1)

    @property
    def params(self):
        return _sm.CompositeParams(self.alpha, self.beta, self.R)

    @property
    def A(self) -> float:
        return abs(self.params.outer_factor(self.n))

    @property
    def B(self) -> float:
        return abs(self.params.inner_factor(self.n))

    def op(self, poly, a=None, n=None) -> ComplexPolynomial:
        return _sm.modified_smirnov(poly, self.a if a is None else a, self.n if n is None else n)

    def composite(self, poly=None) -> complex:
        poly = self.p if poly is None else poly
        return _sm.composite_transform(poly, self.a, self.alpha, self.beta, self.R, self.n)(self.z)

    def T(self, poly=None) -> ComplexPolynomial:
        """``P(Rz) - alpha P(z) + kappa P(z)`` as a polynomial."""
        poly = self.p if poly is None else poly
        kap = self.params.kappa(self.n)
        return poly.dilate(self.R) - poly * (self.alpha - kap)


def _lin(ctx: _Ctx, cM: float, cm: float) -> tuple[float, float]:
    """``cM * M + cm * m`` and its certified error."""
    M, eM = ctx.M if cM else (0.0, 0.0)
    m, em = ctx.m if cm else (0.0, 0.0)
    return cM * M + cm * m, abs(cM) * eM + abs(cm) * em


def _half_bracket(ctx: _Ctx, X: float, Y: float) -> tuple[float, float]:
    """``((X + Y) M - (X - Y) m) / 2``, the shape shared by every refined upper bound."""
    return _lin(ctx, 0.5 * (X + Y), -0.5 * (X - Y))


Sides = tuple[float, float, float, float]  # lhs, lhs_err, rhs, rhs_err


# ---------------------------------------------------------------------------
# side evaluators


def _bernstein(ctx: _Ctx) -> Sides:
    lhs, e = ctx.max_of(ctx.p.derivative(), "dp")
    return (lhs, e, *_lin(ctx, ctx.n, 0))


def _maxmod(ctx: _Ctx) -> Sides:
    lhs, e = ctx.max_of(ctx.p.dilate(ctx.R), "pR")
    return (lhs, e, *_lin(ctx, ctx.R**ctx.n, 0))


def _aziz_dawood_3(ctx: _Ctx) -> Sides:
    lhs, e = ctx.min_of(ctx.p.derivative(), "dp")
    return (lhs, e, *_lin(ctx, 0, ctx.n))


def _aziz_dawood_4(ctx: _Ctx) -> Sides:
    lhs, e = ctx.min_of(ctx.p.dilate(ctx.R), "pR")
    return (lhs, e, *_lin(ctx, 0, ctx.R**ctx.n))


def _erdos_lax(ctx: _Ctx) -> Sides:
    lhs, e = ctx.max_of(ctx.p.derivative(), "dp")
    return (lhs, e, *_lin(ctx, ctx.n / 2, 0))


def _ankeny_rivlin(ctx: _Ctx) -> Sides:
    lhs, e = ctx.max_of(ctx.p.dilate(ctx.R), "pR")
    return (lhs, e, *_lin(ctx, (ctx.R**ctx.n + 1) / 2, 0))


def _aziz_dawood_5(ctx: _Ctx) -> Sides:
    lhs, e = ctx.max_of(ctx.p.derivative(), "dp")
    return (lhs, e, *_lin(ctx, ctx.n / 2, -ctx.n / 2))


def _aziz_dawood_6(ctx: _Ctx) -> Sides:
    lhs, e = ctx.max_of(ctx.p.dilate(ctx.R), "pR")
    Rn = ctx.R**ctx.n
    return (lhs, e, *_lin(ctx, (Rn + 1) / 2, -(Rn - 1) / 2))


def _pr_minus_alpha_p(ctx: _Ctx) -> complex:
    z = ctx.z
    return ctx.p(ctx.R * z) - ctx.alpha * ctx.p(z)


def _aziz_rather_15(ctx: _Ctx) -> Sides:
    lhs = abs(_pr_minus_alpha_p(ctx))
    coef = abs(ctx.R**ctx.n - ctx.alpha) * abs(ctx.z) ** ctx.n
    return (lhs, 0.0, *_lin(ctx, coef, 0))


def _aziz_rather_16(ctx: _Ctx) -> Sides:
    lhs = abs(_pr_minus_alpha_p(ctx))
    coef = 0.5 * (abs(ctx.R**ctx.n - ctx.alpha) * abs(ctx.z) ** ctx.n + abs(1 - ctx.alpha))
    return (lhs, 0.0, *_lin(ctx, coef, 0))


def _aziz_rather_7(ctx: _Ctx) -> Sides:
    poly = ctx.p.dilate(ctx.R) - ctx.p * ctx.alpha
    lhs, e = ctx.min_of(poly, "pR-ap")
    return (lhs, e, *_lin(ctx, 0, abs(ctx.R**ctx.n - ctx.alpha)))


def _aziz_rather_8(ctx: _Ctx) -> Sides:
    lhs = abs(_pr_minus_alpha_p(ctx))
    X = abs(ctx.R**ctx.n - ctx.alpha)
    Y = abs(1 - ctx.alpha)
    return (lhs, 0.0, *_half_bracket(ctx, X, Y))


def _dominated(ctx: _Ctx, expr: Callable[[ComplexPolynomial], complex]) -> Sides:
    return abs(expr(ctx.p)), 0.0, abs(expr(ctx.inst.f)), 0.0


def _thm_a(ctx: _Ctx) -> Sides:
    return _dominated(ctx, lambda q: q.derivative()(ctx.z))


def _thm_b(ctx: _Ctx) -> Sides:
    return _dominated(ctx, lambda q: _sm.smirnov_alpha(q, ctx.alpha, ctx.n)(ctx.z))


def _thm_b_mod(ctx: _Ctx) -> Sides:
    return _dominated(ctx, lambda q: ctx.op(q)(ctx.z))


def _direct_operator(ctx: _Ctx) -> complex:
    # (1 + a z) P'(z) - n a P(z) evaluated term by term, without the operator module
    z, a = ctx.z, ctx.a
    return (1 + a * z) * ctx.p.derivative()(z) - ctx.n * a * ctx.p(z)


def _sf_18(ctx: _Ctx) -> Sides:
    return (abs(ctx.op(ctx.p)(ctx.z)), 0.0, *_lin(ctx, ctx.s, 0))


def _sf_19(ctx: _Ctx) -> Sides:
    return (abs(_direct_operator(ctx)), 0.0, *_lin(ctx, ctx.n * abs(ctx.z) ** (ctx.n - 1), 0))


def _sf_110(ctx: _Ctx) -> Sides:
    coef = 0.5 * (ctx.s + ctx.n * abs(ctx.a))
    return (abs(ctx.op(ctx.p)(ctx.z)), 0.0, *_lin(ctx, coef, 0))


def _sf_111(ctx: _Ctx) -> Sides:
    coef = 0.5 * (ctx.n * abs(ctx.z) ** (ctx.n - 1) + ctx.n * abs(ctx.a))
    return (abs(_direct_operator(ctx)), 0.0, *_lin(ctx, coef, 0))


def _sf_9(ctx: _Ctx) -> Sides:
    return (abs(ctx.op(ctx.p)(ctx.z)), 0.0, *_lin(ctx, 0, ctx.s))


def _sf_10(ctx: _Ctx) -> Sides:
    lhs = abs(ctx.op(ctx.p)(ctx.z))
    return (lhs, 0.0, *_half_bracket(ctx, ctx.s, ctx.n * abs(ctx.a)))


def _wl_diff(ctx: _Ctx) -> complex:
    # S_a[P_R](z) - alpha S_a[P](z), no kappa term
    return ctx.op(ctx.p.dilate(ctx.R))(ctx.z) - ctx.alpha * ctx.op(ctx.p)(ctx.z)


def _wl_112(ctx: _Ctx) -> Sides:
    coef = abs(ctx.R**ctx.n - ctx.alpha) * ctx.s
    return (abs(_wl_diff(ctx)), 0.0, *_lin(ctx, coef, 0))


def _wl_113(ctx: _Ctx) -> Sides:
    coef = 0.5 * (abs(ctx.R**ctx.n - ctx.alpha) * ctx.s
                  + ctx.n * abs(1 - ctx.alpha) * abs(ctx.a))
    return (abs(_wl_diff(ctx)), 0.0, *_lin(ctx, coef, 0))


def _dh_c(ctx: _Ctx) -> Sides:
    lhs, e = ctx.min_of(ctx.T(), "T")
    return (lhs, e, *_lin(ctx, 0, ctx.A))


def _dh_d(ctx: _Ctx) -> Sides:
    lhs = abs(ctx.T()(ctx.z))
    return (lhs, 0.0, *_half_bracket(ctx, ctx.A, ctx.B))


def _thm1(ctx: _Ctx) -> Sides:
    return (abs(ctx.composite()), 0.0, *_lin(ctx, 0, ctx.A * ctx.s))


def _thm1_rem1(ctx: _Ctx) -> Sides:
    # the a = 0 display built from P' directly
    dp = ctx.p.derivative()
    z, R = ctx.z, ctx.R
    kap = ctx.params.kappa(ctx.n)
    lhs = abs(R * dp(R * z) - ctx.alpha * dp(z) + kap * dp(z))
    return (lhs, 0.0, *_lin(ctx, 0, ctx.A * ctx.n * abs(z) ** (ctx.n - 1)))


def _thm1_rem2(ctx: _Ctx) -> Sides:
    lhs = abs(ctx.op(ctx.p.dilate(ctx.R))(ctx.z))
    return (lhs, 0.0, *_lin(ctx, 0, ctx.R**ctx.n * ctx.s))


def _alpha0_expr(ctx: _Ctx) -> tuple[complex, float]:
    c = ((ctx.R + 1) / 2) ** ctx.n
    val = ctx.op(ctx.p.dilate(ctx.R))(ctx.z) + ctx.beta * c * ctx.op(ctx.p)(ctx.z)
    return val, c


def _thm1_alpha0(ctx: _Ctx) -> Sides:
    val, c = _alpha0_expr(ctx)
    return (abs(val), 0.0, *_lin(ctx, 0, abs(ctx.R**ctx.n + ctx.beta * c) * ctx.s))


def _thm1_beta0(ctx: _Ctx) -> Sides:
    return (abs(_wl_diff(ctx)), 0.0, *_lin(ctx, 0, abs(ctx.R**ctx.n - ctx.alpha) * ctx.s))


def _cor22(ctx: _Ctx) -> Sides:
    lhs = abs(_sm.corollary_limit_lhs(ctx.p, ctx.a, ctx.beta, ctx.n)(ctx.z))
    return (lhs, 0.0, *_lin(ctx, 0, ctx.n * abs(1 + ctx.beta / 2) * ctx.s))


def _thm2(ctx: _Ctx) -> Sides:
    X = ctx.A * ctx.s
    Y = ctx.B * ctx.n * abs(ctx.a)
    return (abs(ctx.composite()), 0.0, *_half_bracket(ctx, X, Y))


def _thm2_beta0(ctx: _Ctx) -> Sides:
    X = abs(ctx.R**ctx.n - ctx.alpha) * ctx.s
    Y = abs(1 - ctx.alpha) * ctx.n * abs(ctx.a)
    return (abs(_wl_diff(ctx)), 0.0, *_half_bracket(ctx, X, Y))


def _thm2_alpha0(ctx: _Ctx) -> Sides:
    val, c = _alpha0_expr(ctx)
    X = abs(ctx.R**ctx.n + ctx.beta * c) * ctx.s
    # the minimum term carries 1 + beta c as in the maximum term
    Y = abs(1 + ctx.beta * c) * ctx.n * abs(ctx.a)
    return (abs(val), 0.0, *_half_bracket(ctx, X, Y))


def _cor24(ctx: _Ctx) -> Sides:
    lhs = abs(_sm.corollary_limit_lhs(ctx.p, ctx.a, ctx.beta, ctx.n)(ctx.z))
    X = abs(1 + ctx.beta / 2) * ctx.s
    Y = 0.5 * ctx.n * abs(ctx.beta) * abs(ctx.a)
    rhs, e = _half_bracket(ctx, X, Y)
    return (lhs, 0.0, ctx.n * rhs, ctx.n * e)


def _lemma1(ctx: _Ctx) -> Sides:
    k = ctx.inst.k
    if k is None:
        k = float(_roots.find_roots(ctx.p).moduli.max())
    z, R = ctx.z, ctx.R
    factor = ((R + k) / (1 + k)) ** ctx.n
    return abs(ctx.p(R * z)), 0.0, factor * abs(ctx.p(z)), 0.0


def _lemma2(ctx: _Ctx) -> Sides:
    s = ctx.op(ctx.p)
    if s.degree < 1:
        return 0.0, 0.0, 1.0, 0.0
    rs = _roots.find_roots(s, strict=False)
    return float(rs.moduli.max()), 0.0, 1.0, 1e-6


def _lemma3(ctx: _Ctx) -> Sides:
    return abs(ctx.composite(ctx.p)), 0.0, abs(ctx.composite(ctx.inst.f)), 0.0


def _lemma4(ctx: _Ctx) -> Sides:
    q = ctx.p.conjugate_reciprocal(ctx.n)
    lhs = abs(ctx.composite(ctx.p)) + abs(ctx.composite(q))
    coef = ctx.A * ctx.s + ctx.B * ctx.n * abs(ctx.a)
    return (lhs, 0.0, *_lin(ctx, coef, 0))


# ---------------------------------------------------------------------------
# extremal families


@dataclass(frozen=True)
class Family:
    """A named parametric family of polynomials on which an entry is sharp."""

    name: str
    build: Callable[..., ComplexPolynomial]
    defaults: dict = field(default_factory=dict)
    pair: bool = False

    def make(self, n: int, **params) -> ComplexPolynomial:
        kw = dict(self.defaults)
        kw.update(params)
        return self.build(n, **kw)


def _monomial(n: int, lam: complex = 2.0) -> ComplexPolynomial:
    return ComplexPolynomial.monomial(n, lam)


def _binomial(n: int, lead: complex = 1.0, const: complex = 1.0) -> ComplexPolynomial:
    c = np.zeros(n + 1, dtype=np.complex128)
    c[0] += const
    c[n] += lead
    return ComplexPolynomial(c)


def _rotated_monomial(n: int, m: float = 1.5, gamma: float = 0.7) -> ComplexPolynomial:
    return ComplexPolynomial.monomial(n, m * np.exp(1j * gamma))


def _half_binomial(n: int, gamma_arg: float = 0.3, delta_arg: float = -1.1) -> ComplexPolynomial:
    return _binomial(n, 0.5 * np.exp(1j * gamma_arg), 0.5 * np.exp(1j * delta_arg))


def _shifted_power(n: int, k: float = 0.5) -> ComplexPolynomial:
    return _roots.from_roots([-k] * n)


FAMILIES = {
    "lambda z^n": Family("lambda z^n", _monomial, {"lam": 2.0}),
    "z^n + 1": Family("z^n + 1", lambda n: _binomial(n)),
    "alpha z^n + beta, |alpha| = |beta|": Family(
        "alpha z^n + beta, |alpha| = |beta|", _binomial,
        {"lead": 1.0 + 0j, "const": np.exp(0.9j)}),
    "m e^{i gamma} z^n": Family("m e^{i gamma} z^n", _rotated_monomial),
    "gamma z^n + delta, |gamma| = |delta| = 1/2": Family(
        "gamma z^n + delta, |gamma| = |delta| = 1/2", _half_binomial),
    "(z + k)^n": Family("(z + k)^n", _shifted_power, {"k": 0.5}),
    "e^{i gamma} F": Family("e^{i gamma} F", _monomial, {"lam": np.exp(0.4j)}, pair=True),
}


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class InequalityEntry:
    id: str
    citation: str
    hypothesis: Hypothesis
    direction: Direction
    params: ParamSchema
    sides: Callable[[_Ctx], Sides] = field(repr=False)
    sharp_family: str | None = None
    notes: str = ""
    diagnostic: bool = False

    def describe(self) -> dict:
        return {"id": self.id, "citation": self.citation,
                "hypothesis": self.hypothesis.value, "direction": self.direction.value,
                "params": self.params.to_dict(), "sharp_family": self.sharp_family,
                "notes": self.notes, "diagnostic": self.diagnostic}


H = Hypothesis
LE, GE = Direction.LE, Direction.GE
_ALL = ("a", "alpha", "beta", "R")

_ENTRIES = [
    InequalityEntry("bernstein-1.1", "Bernstein: max|P'| <= n max|P|", H.UNRESTRICTED, LE,
                    ParamSchema((), "none"), _bernstein, "lambda z^n"),
    InequalityEntry("maxmod-1.2", "maximum modulus growth: max|P(Rz)| <= R^n max|P|",
                    H.UNRESTRICTED, LE, ParamSchema(("R",), "none"), _maxmod, "lambda z^n"),
    InequalityEntry("aziz-dawood-3", "Aziz-Dawood: min|P'| >= n min|P|",
                    H.ALL_ZEROS_IN_CLOSED_DISK, GE, ParamSchema((), "none"), _aziz_dawood_3,
                    "lambda z^n"),
    InequalityEntry("aziz-dawood-4", "Aziz-Dawood: min|P(Rz)| >= R^n min|P|",
                    H.ALL_ZEROS_IN_CLOSED_DISK, GE, ParamSchema(("R",), "none"),
                    _aziz_dawood_4, "lambda z^n"),
    InequalityEntry("erdos-lax-1.3", "Erdos-Lax: max|P'| <= (n/2) max|P|",
                    H.NO_ZEROS_IN_OPEN_DISK, LE, ParamSchema((), "none"), _erdos_lax,
                    "alpha z^n + beta, |alpha| = |beta|"),
    InequalityEntry("ankeny-rivlin-1.4", "Ankeny-Rivlin: max|P(Rz)| <= (R^n+1)/2 max|P|",
                    H.NO_ZEROS_IN_OPEN_DISK, LE, ParamSchema(("R",), "none"),
                    _ankeny_rivlin, "alpha z^n + beta, |alpha| = |beta|"),
    InequalityEntry("aziz-dawood-5", "Aziz-Dawood: max|P'| <= (n/2)(max|P| - min|P|)",
                    H.NO_ZEROS_IN_OPEN_DISK, LE, ParamSchema((), "none"), _aziz_dawood_5,
                    "alpha z^n + beta, |alpha| = |beta|"),
    InequalityEntry("aziz-dawood-6",
                    "Aziz-Dawood: max|P(Rz)| <= (R^n+1)/2 max|P| - (R^n-1)/2 min|P|",
                    H.NO_ZEROS_IN_OPEN_DISK, LE, ParamSchema(("R",), "none"), _aziz_dawood_6,
                    "alpha z^n + beta, |alpha| = |beta|"),
    InequalityEntry("aziz-rather-1.5", "Aziz-Rather: |P(Rz) - alpha P(z)| <= |R^n - alpha||z|^n M",
                    H.UNRESTRICTED, LE, ParamSchema(("alpha", "R")), _aziz_rather_15,
                    "lambda z^n"),
    InequalityEntry("aziz-rather-1.6",
                    "Aziz-Rather, no zeros in D: half of (|R^n - alpha||z|^n + |1 - alpha|) M",
                    H.NO_ZEROS_IN_OPEN_DISK, LE, ParamSchema(("alpha", "R")), _aziz_rather_16,
                    "z^n + 1"),
    InequalityEntry("aziz-rather-7", "Aziz-Rather: min|P(Rz) - alpha P(z)| >= |R^n - alpha| min|P|",
                    H.ALL_ZEROS_IN_CLOSED_DISK, GE, ParamSchema(("alpha", "R"), "none"),
                    _aziz_rather_7, "m e^{i gamma} z^n"),
    InequalityEntry("aziz-rather-8", "Aziz-Rather refinement with max and min of |P|",
                    H.NO_ZEROS_IN_OPEN_DISK, LE, ParamSchema(("alpha", "R"), "unit_circle"),
                    _aziz_rather_8, "gamma z^n + delta, |gamma| = |delta| = 1/2",
                    notes="checked on |z| = 1, where the bound is stated for the circle maxima"),
    InequalityEntry("bernstein-thmA", "Bernstein comparison: |P'(z)| <= |F'(z)|",
                    H.DOMINATED_PAIR, LE, ParamSchema(()), _thm_a, "e^{i gamma} F"),
    InequalityEntry("smirnov-thmB-1.7",
                    "Smirnov comparison: |S_alpha[P](z)| <= |S_alpha[F](z)| on Omega_|z|",
                    H.DOMINATED_PAIR, LE, ParamSchema(("alpha",), alpha_domain="omega"),
                    _thm_b, "e^{i gamma} F"),
    InequalityEntry("smirnov-thmB-mod",
                    "Smirnov comparison, modified operator: |S_a[P](z)| <= |S_a[F](z)|",
                    H.DOMINATED_PAIR, LE, ParamSchema(("a",)), _thm_b_mod, "e^{i gamma} F"),
    InequalityEntry("shah-fatima-1.8", "Shah-Fatima: |S_a[P](z)| <= M |S_a[z^n]|",
                    H.UNRESTRICTED, LE, ParamSchema(("a",)), _sf_18, "lambda z^n"),
    InequalityEntry("shah-fatima-1.9", "Shah-Fatima, expanded: |(1+az)P' - naP| <= M n|z|^(n-1)",
                    H.UNRESTRICTED, LE, ParamSchema(("a",)), _sf_19, "lambda z^n"),
    InequalityEntry("shah-fatima-1.10",
                    "Shah-Fatima, no zeros in D: |S_a[P](z)| <= (|S_a[z^n]| + n|a|) M / 2",
                    H.NO_ZEROS_IN_OPEN_DISK, LE, ParamSchema(("a",)), _sf_110, "z^n + 1"),
    InequalityEntry("shah-fatima-1.11",
                    "Shah-Fatima, no zeros in D, expanded: (n|z|^(n-1) + n|a|) M / 2",
                    H.NO_ZEROS_IN_OPEN_DISK, LE, ParamSchema(("a",)), _sf_111, "z^n + 1"),
    InequalityEntry("shah-fatima-9", "Shah-Fatima: |S_a[P](z)| >= |S_a[z^n]| min|P|",
                    H.ALL_ZEROS_IN_CLOSED_DISK, GE, ParamSchema(("a",)), _sf_9, "lambda z^n"),
    InequalityEntry("shah-fatima-10", "Shah-Fatima refinement with max and min of |P|",
                    H.NO_ZEROS_IN_OPEN_DISK, LE, ParamSchema(("a",)), _sf_10, "z^n + 1"),
    InequalityEntry("wani-liman-1.12",
                    "Wani-Liman: |S_a[P](Rz) - alpha S_a[P](z)| <= |R^n - alpha||S_a[z^n]| M",
                    H.UNRESTRICTED, LE, ParamSchema(("a", "alpha", "R")), _wl_112, "lambda z^n"),
    InequalityEntry("wani-liman-1.13", "Wani-Liman, no zeros in D",
                    H.NO_ZEROS_IN_OPEN_DISK, LE, ParamSchema(("a", "alpha", "R")), _wl_113,
                    "lambda z^n"),
    InequalityEntry("dewan-hans-C-1.14",
                    "Dewan-Hans C: min|P(Rz) - alpha P + kappa P| >= |R^n - alpha + kappa| min|P|",
                    H.ALL_ZEROS_IN_CLOSED_DISK, GE, ParamSchema(("alpha", "beta", "R"), "none"),
                    _dh_c, "m e^{i gamma} z^n",
                    notes="direction >=; the printed relation symbol is a typo"),
    InequalityEntry("dewan-hans-D-1.15", "Dewan-Hans D: refinement with max and min of |P|",
                    H.NO_ZEROS_IN_OPEN_DISK, LE,
                    ParamSchema(("alpha", "beta", "R"), "unit_circle"), _dh_d,
                    "gamma z^n + delta, |gamma| = |delta| = 1/2",
                    notes="checked on |z| = 1"),
    InequalityEntry("thm1-2.1", "main lower bound for the composite, zeros in closed disk",
                    H.ALL_ZEROS_IN_CLOSED_DISK, GE, ParamSchema(_ALL), _thm1, "lambda z^n"),
    InequalityEntry("thm1-rem1-a0", "main lower bound at a = 0, written with P'",
                    H.ALL_ZEROS_IN_CLOSED_DISK, GE, ParamSchema(("alpha", "beta", "R")),
                    _thm1_rem1, "lambda z^n"),
    InequalityEntry("thm1-rem2-ab0", "main lower bound at alpha = beta = 0",
                    H.ALL_ZEROS_IN_CLOSED_DISK, GE, ParamSchema(("a", "R")), _thm1_rem2,
                    "lambda z^n"),
    InequalityEntry("cor-2.2", "R -> 1 limit of the main lower bound at alpha = 1",
                    H.ALL_ZEROS_IN_CLOSED_DISK, GE, ParamSchema(("a", "beta")), _cor22,
                    "lambda z^n"),
    InequalityEntry("thm1-alpha0", "main lower bound at alpha = 0",
                    H.ALL_ZEROS_IN_CLOSED_DISK, GE, ParamSchema(("a", "beta", "R")),
                    _thm1_alpha0, "lambda z^n"),
    InequalityEntry("thm1-beta0", "main lower bound at beta = 0",
                    H.ALL_ZEROS_IN_CLOSED_DISK, GE, ParamSchema(("a", "alpha", "R")),
                    _thm1_beta0, "lambda z^n"),
    InequalityEntry("thm2-2.3", "main upper bound for the composite, no zeros in D",
                    H.NO_ZEROS_IN_OPEN_DISK, LE, ParamSchema(_ALL), _thm2, "z^n + 1"),
    InequalityEntry("thm2-beta0", "main upper bound at beta = 0",
                    H.NO_ZEROS_IN_OPEN_DISK, LE, ParamSchema(("a", "alpha", "R")), _thm2_beta0,
                    "z^n + 1"),
    InequalityEntry("thm2-alpha0", "main upper bound at alpha = 0",
                    H.NO_ZEROS_IN_OPEN_DISK, LE, ParamSchema(("a", "beta", "R")), _thm2_alpha0,
                    "z^n + 1", notes="min term uses |1 + beta c|, matching the max term"),
    InequalityEntry("cor-2.4", "R -> 1 limit of the main upper bound at alpha = 1",
                    H.NO_ZEROS_IN_OPEN_DISK, LE, ParamSchema(("a", "beta")), _cor24, "z^n + 1",
                    notes="no R dependence"),
    InequalityEntry("lemma1-3.1", "growth from |z| = 1 to |z| = R, zeros in |z| <= k",
                    H.ZEROS_IN_RADIUS_K, GE, ParamSchema(("R",), "unit_circle"), _lemma1,
                    "(z + k)^n"),
    InequalityEntry("lemma2-zeros", "zeros of S_a[P] stay in the closed disk for |a| = 1",
                    H.ALL_ZEROS_IN_CLOSED_DISK, LE, ParamSchema(("a",), "none", a_domain="circle"),
                    _lemma2, None, diagnostic=True,
                    notes="lhs is the largest zero modulus of S_a[P]; diagnostic only"),
    InequalityEntry("lemma3-3.2", "composite comparison for a dominated pair",
                    H.DOMINATED_PAIR, LE, ParamSchema(_ALL), _lemma3, "e^{i gamma} F"),
    InequalityEntry("lemma4-3.3", "composite sum bound with the conjugate reciprocal",
                    H.UNRESTRICTED, LE, ParamSchema(_ALL), _lemma4, "lambda z^n"),
]

REGISTRY: dict[str, InequalityEntry] = {e.id: e for e in _ENTRIES}


def get_entry(entry_id: str) -> InequalityEntry:
    try:
        return REGISTRY[entry_id]
    except KeyError:
        raise KeyError(f"unknown inequality id {entry_id!r}") from None


def list_entries() -> list[dict]:
    return [e.describe() for e in _ENTRIES]


# ---------------------------------------------------------------------------
# checking


def verify_hypothesis(entry: InequalityEntry, inst: InequalityInstance,
                      pair_tol: float = 1e-12) -> None:
    """Raise :class:`HypothesisViolated` unless ``inst`` satisfies the entry's hypothesis."""
    h = entry.hypothesis
    if h is Hypothesis.UNRESTRICTED:
        return
    if h is Hypothesis.DOMINATED_PAIR:
        f = inst.f
        if f is None:
            raise HypothesisViolated("dominated-pair entry needs f")
        if inst.p.degree > f.degree:
            raise HypothesisViolated("deg P exceeds deg F")
        if not _roots.classify_zeros(f).all_in_closed_disk:
            raise HypothesisViolated("F has a zero outside the closed disk")
        lower, _ = _circle.dominance_margin(inst.p, f, pair_tol)
        if lower < 0:
            raise HypothesisViolated(f"|P| <= |F| not certified on the circle (margin {lower:.3e})")
        return
    loc = _roots.classify_zeros(inst.p)
    if h is Hypothesis.ALL_ZEROS_IN_CLOSED_DISK and not loc.all_in_closed_disk:
        raise HypothesisViolated(f"largest zero modulus {loc.max_modulus:.12g} > 1")
    if h is Hypothesis.NO_ZEROS_IN_OPEN_DISK and not loc.none_in_open_disk:
        raise HypothesisViolated(f"smallest zero modulus {loc.min_modulus:.12g} < 1")
    if h is Hypothesis.ZEROS_IN_RADIUS_K:
        k = 1.0 if inst.k is None else inst.k
        if k > 1 + _DISK_TOL or not loc.all_in_radius(k):
            raise HypothesisViolated(f"zeros not within radius {k}")


def check(inst: InequalityInstance, tol: float = EXTREMA_TOL, hypothesis: bool = True,
          eps: float = EPS_SLACK) -> Verdict:
    """Evaluate both sides of ``inst.entry`` at ``inst`` and compare them.

    Certified error bounds of every circle extremum used are added to the
    allowance.  A certificate that stayed loose is still rigorous, so it only
    matters when the verdict hinges on it: if the slack lies in the band the
    allowance alone rescues, :class:`~modsmirnov.circle.TolValueUnreachable`
    is raised instead of guessing.
    """
    entry = get_entry(inst.entry)
    entry.params.validate(inst)
    if inst.degree_class < max(inst.p.degree, 1):
        raise ValueError("degree class below deg P")
    if hypothesis:
        verify_hypothesis(entry, inst)
    ctx = _Ctx(inst, tol)
    lhs, lhs_err, rhs, rhs_err = entry.sides(ctx)
    allowance = lhs_err + rhs_err
    verdict = Verdict.build(entry.id, entry.direction, lhs, rhs, allowance, eps)
    floor = eps * verdict.scale
    if ctx.loose and allowance > floor and -(floor + allowance) <= verdict.slack < -floor:
        ext = next(x for x in ctx._cache.values() if not x.converged)
        raise _circle.TolValueUnreachable(
            f"{entry.id}: circle certificate {allowance:.3e} too loose to decide", ext)
    return verdict


# ---------------------------------------------------------------------------
# sharpness


DEFAULT_GRID = {
    "a": [0, 0.5, -0.3 + 0.4j, 1, 1j, -1],
    "alpha": [0, 1, -1, 0.5j, 0.6 - 0.3j],
    "beta": [0, 1, -1, 0.5j, 0.6 - 0.3j],
    "R": [1.0, 1.5, 2.0, 3.0],
    "theta": [0.0, np.pi / 3, np.pi, 5 * np.pi / 3],
    "radius": [1.0],
}


@dataclass(frozen=True)
class SharpnessScan:
    entry: str
    family: str
    n: int
    gaps: np.ndarray
    best: dict
    worst: dict
    failures: int = 0

    @property
    def gap(self) -> float:
        return float(self.gaps.min())

    @property
    def max_gap(self) -> float:
        return float(self.gaps.max())

    def to_dict(self) -> dict:
        return {"entry": self.entry, "family": self.family, "n": self.n, "points": int(self.gaps.size),
                "min_gap": self.gap, "max_gap": self.max_gap, "best": self.best, "worst": self.worst,
                "failures": self.failures}


def _grid_points(entry: InequalityEntry, grid: dict) -> Iterable[dict]:
    import itertools

    names = [k for k in ("a", "alpha", "beta", "R") if k in entry.params.uses]
    z_names = [] if entry.params.z_domain == "none" else ["theta", "radius"]
    if entry.params.z_domain == "unit_circle":
        z_names = ["theta"]
    keys = names + z_names
    for combo in itertools.product(*(grid[k] for k in keys)):
        yield dict(zip(keys, combo))


def sharpness_scan(entry_id: str, n: int = 3, family_params: dict | None = None,
                   grid: dict | None = None, tol: float = EXTREMA_TOL) -> SharpnessScan:
    """Relative slack ``slack / scale`` of the entry on its extremal family over a grid.

    Points outside the entry's parameter domain are skipped.  Hypotheses are
    not re-verified because the families sit on the classification boundary.
    """
    entry = get_entry(entry_id)
    if entry.sharp_family is None:
        raise ValueError(f"{entry_id} has no extremal family")
    fam = FAMILIES[entry.sharp_family]
    fam_kw = dict(family_params or {})
    if entry.hypothesis is Hypothesis.ZEROS_IN_RADIUS_K:
        fam_kw.setdefault("k", fam.defaults.get("k", 0.5))
    p = fam.make(n, **fam_kw)
    f = None
    if fam.pair:
        f = _roots.from_roots(np.linspace(-0.6, 0.6, n) * 1j ** np.arange(n))
        p = f * complex(fam_kw.get("lam", fam.defaults["lam"]))
    full = dict(DEFAULT_GRID)
    full.update(grid or {})
    gaps, points = [], []
    failures = 0
    for pt in _grid_points(entry, full):
        theta, radius = pt.get("theta", 0.0), pt.get("radius", 1.0)
        z = radius * np.exp(1j * theta)
        kw = {k: pt[k] for k in ("a", "alpha", "beta", "R") if k in pt}
        inst = InequalityInstance(entry_id, p, z=z, f=f, n=n,
                                  k=fam_kw.get("k") if "k" in fam_kw else None, **kw)
        try:
            entry.params.validate(inst)
        except ValueError:
            continue
        v = check(inst, tol=tol, hypothesis=False)
        failures += not v.passed
        gaps.append(max(v.relative_slack, 0.0) if v.passed else v.relative_slack)
        points.append({k: _jsonable(v_) for k, v_ in pt.items()})
    if not gaps:
        raise ValueError(f"grid has no admissible point for {entry_id}")
    arr = np.abs(np.asarray(gaps))
    return SharpnessScan(entry_id, fam.name, n, arr, points[int(arr.argmin())],
                         points[int(arr.argmax())], failures)


def sharpness_gap(entry_id: str, n: int = 3, family_params: dict | None = None,
                  grid: dict | None = None) -> float:
    """Smallest relative slack of the entry on its extremal family over the grid."""
    return sharpness_scan(entry_id, n, family_params, grid).gap


def _jsonable(v):
    if isinstance(v, complex) or isinstance(v, np.complexfloating):
        return [float(v.real), float(v.imag)]
    return float(v)


# ---------------------------------------------------------------------------
# reduction links


@dataclass(frozen=True)
class ReductionLink:
    """``source`` specialized at some parameter values reproduces ``target``.

    ``pair(inst)`` returns ((lhs, rhs) of the specialized source, (lhs, rhs)
    of the independently written target) for an instance already carrying
    the specialization.  ``specialize`` maps a random instance of the source
    hypothesis onto the link's parameter slice.
    """

    id: str
    source: str
    target: str
    description: str
    specialize: Callable[[InequalityInstance], InequalityInstance] = field(repr=False)
    pair: Callable[[InequalityInstance], tuple] | None = field(default=None, repr=False)
    limit: bool = False

    def describe(self) -> dict:
        return {"id": self.id, "source": self.source, "target": self.target,
                "description": self.description, "kind": "limit" if self.limit else "value"}


def _sides(entry_id: str, inst: InequalityInstance) -> tuple[float, float]:
    v = check(inst.replace(entry=entry_id), hypothesis=False)
    return v.lhs, v.rhs


def _on_circle(inst: InequalityInstance) -> complex:
    return inst.z / abs(inst.z)


def _spec(**fixed):
    def apply(inst: InequalityInstance) -> InequalityInstance:
        kw = {}
        for k, v in fixed.items():
            kw[k] = v(inst) if callable(v) else v
        return inst.replace(**kw)

    return apply


def _a_inv_z(inst):
    return -1.0 / inst.z


def _entry_pair(source: str, target: str, factor: Callable | None = None,
                target_inst: Callable | None = None):
    def pair(inst):
        sl, sr = _sides(source, inst)
        f = 1.0 if factor is None else factor(inst)
        t = inst if target_inst is None else target_inst(inst)
        return (sl * f, sr * f), _sides(target, t)

    return pair


def _inv_z_factor(inst):
    return abs(inst.z) / inst.degree_class


def _pointwise_growth(inst):
    # target is |P(R w)| against R^n M, with z = R w
    R = abs(inst.z)
    w = inst.z / R
    return inst.replace(R=R, z=w)


def _pair_19_12(inst):
    (sl, sr), _ = _entry_pair("shah-fatima-1.9", "shah-fatima-1.9", _inv_z_factor)(inst)
    R = abs(inst.z)
    w = inst.z / R
    M = _circle.certified_max_modulus(inst.p).value
    return (sl, sr), (abs(inst.p(R * w)), R**inst.degree_class * M)


def _pair_111_14(inst):
    (sl, sr), _ = _entry_pair("shah-fatima-1.11", "shah-fatima-1.11", _inv_z_factor)(inst)
    R = abs(inst.z)
    w = inst.z / R
    M = _circle.certified_max_modulus(inst.p).value
    return (sl, sr), (abs(inst.p(R * w)), (R**inst.degree_class + 1) / 2 * M)


def _pair_a0(source, expected_rhs):
    def pair(inst):
        sl, sr = _sides(source, inst)
        M = _circle.certified_max_modulus(inst.p).value
        return (sl, sr), (abs(inst.p.derivative()(inst.z)), expected_rhs(inst.degree_class) * M)

    return pair


def _pair_thm1_114(inst):
    sl, sr = _sides("thm1-2.1", inst)
    f = _inv_z_factor(inst)
    n = inst.degree_class
    cp = _sm.CompositeParams(inst.alpha, inst.beta, inst.R)
    T = inst.p.dilate(inst.R) - inst.p * (inst.alpha - cp.kappa(n))
    m = _circle.certified_min_modulus(inst.p).value
    return (sl * f, sr * f), (abs(T(inst.z)), abs(cp.outer_factor(n)) * m)


def _pair_rem2_4(inst):
    sl, sr = _sides("thm1-rem2-ab0", inst)
    f = _inv_z_factor(inst)
    m = _circle.certified_min_modulus(inst.p).value
    return (sl * f, sr * f), (abs(inst.p(inst.R * inst.z)), inst.R**inst.degree_class * m)


def _pair_thm2_115(inst):
    sl, sr = _sides("thm2-2.3", inst)
    f = _inv_z_factor(inst)
    return (sl * f, sr * f), _sides("dewan-hans-D-1.15", inst)


def _pair_wl(source, target):
    def pair(inst):
        sl, sr = _sides(source, inst)
        f = _inv_z_factor(inst)
        return (sl * f, sr * f), _sides(target, inst)

    return pair


_LINKS = [
    ReductionLink("sf19-a0-bernstein", "shah-fatima-1.9", "bernstein-1.1",
                  "a = 0 on |z| = 1 gives |P'(z)| against n M",
                  _spec(a=0, z=_on_circle), _pair_a0("shah-fatima-1.9", lambda n: n)),
    ReductionLink("sf111-a0-erdos-lax", "shah-fatima-1.11", "erdos-lax-1.3",
                  "a = 0 on |z| = 1 gives |P'(z)| against (n/2) M",
                  _spec(a=0, z=_on_circle), _pair_a0("shah-fatima-1.11", lambda n: n / 2)),
    ReductionLink("sf19-ainvz-maxmod", "shah-fatima-1.9", "maxmod-1.2",
                  "a = -1/z, times |z|/n, gives |P(R w)| against R^n M",
                  _spec(a=_a_inv_z), _pair_19_12),
    ReductionLink("sf111-ainvz-ankeny-rivlin", "shah-fatima-1.11", "ankeny-rivlin-1.4",
                  "a = -1/z, times |z|/n, gives |P(R w)| against (R^n + 1)/2 M",
                  _spec(a=_a_inv_z), _pair_111_14),
    ReductionLink("wl112-ainvz-ar15", "wani-liman-1.12", "aziz-rather-1.5",
                  "a = -1/z, times |z|/n", _spec(a=_a_inv_z),
                  _pair_wl("wani-liman-1.12", "aziz-rather-1.5")),
    ReductionLink("wl113-ainvz-ar16", "wani-liman-1.13", "aziz-rather-1.6",
                  "a = -1/z, times |z|/n", _spec(a=_a_inv_z),
                  _pair_wl("wani-liman-1.13", "aziz-rather-1.6")),
    ReductionLink("ar15-alpha0-maxmod", "aziz-rather-1.5", "maxmod-1.2",
                  "alpha = 0 on |z| = 1 gives |P(Rz)| against R^n M",
                  _spec(alpha=0, z=_on_circle),
                  lambda inst: (_sides("aziz-rather-1.5", inst),
                                (abs(inst.p(inst.R * inst.z)),
                                 inst.R**inst.degree_class
                                 * _circle.certified_max_modulus(inst.p).value))),
    ReductionLink("thm1-a0-rem1", "thm1-2.1", "thm1-rem1-a0",
                  "a = 0 turns the operator into the derivative", _spec(a=0),
                  _entry_pair("thm1-2.1", "thm1-rem1-a0")),
    ReductionLink("thm1-ainvz-dhC", "thm1-2.1", "dewan-hans-C-1.14",
                  "a = -1/z on |z| = 1, times |z|/n, gives the pointwise Dewan-Hans C form",
                  _spec(z=_on_circle, a=lambda i: -np.conj(_on_circle(i))), _pair_thm1_114),
    ReductionLink("thm1-ab0-rem2", "thm1-2.1", "thm1-rem2-ab0", "alpha = beta = 0",
                  _spec(alpha=0, beta=0), _entry_pair("thm1-2.1", "thm1-rem2-ab0")),
    ReductionLink("rem2-ainvz-ad4", "thm1-rem2-ab0", "aziz-dawood-4",
                  "a = -1/z on |z| = 1, times |z|/n, gives |P(Rz)| against R^n m",
                  _spec(alpha=0, beta=0, z=_on_circle, a=lambda i: -np.conj(_on_circle(i))),
                  _pair_rem2_4),
    ReductionLink("rem2-R1-sf9", "thm1-rem2-ab0", "shah-fatima-9", "R = 1",
                  _spec(alpha=0, beta=0, R=1.0), _entry_pair("thm1-rem2-ab0", "shah-fatima-9")),
    ReductionLink("thm1-beta0", "thm1-2.1", "thm1-beta0", "beta = 0", _spec(beta=0),
                  _entry_pair("thm1-2.1", "thm1-beta0")),
    ReductionLink("thm1-alpha0", "thm1-2.1", "thm1-alpha0", "alpha = 0", _spec(alpha=0),
                  _entry_pair("thm1-2.1", "thm1-alpha0")),
    ReductionLink("thm2-ab0R1-sf10", "thm2-2.3", "shah-fatima-10", "alpha = beta = 0, R = 1",
                  _spec(alpha=0, beta=0, R=1.0), _entry_pair("thm2-2.3", "shah-fatima-10")),
    ReductionLink("thm2-ainvz-dhD", "thm2-2.3", "dewan-hans-D-1.15",
                  "a = -1/z on |z| = 1, times |z|/n",
                  _spec(z=_on_circle, a=lambda i: -np.conj(_on_circle(i))), _pair_thm2_115),
    ReductionLink("thm2-beta0", "thm2-2.3", "thm2-beta0", "beta = 0", _spec(beta=0),
                  _entry_pair("thm2-2.3", "thm2-beta0")),
    ReductionLink("thm2-alpha0", "thm2-2.3", "thm2-alpha0", "alpha = 0", _spec(alpha=0),
                  _entry_pair("thm2-2.3", "thm2-alpha0")),
    ReductionLink("thm1-R1-cor22", "thm1-2.1", "cor-2.2",
                  "alpha = 1, divide by R - 1, let R -> 1", _spec(alpha=1.0), limit=True),
    ReductionLink("thm2-R1-cor24", "thm2-2.3", "cor-2.4",
                  "alpha = 1, divide by R - 1, let R -> 1", _spec(alpha=1.0), limit=True),
]

LINKS: dict[str, ReductionLink] = {l.id: l for l in _LINKS}

LIMIT_STEPS = (1e-3, 1e-4, 1e-5)
MIN_ORDER = 0.9


@dataclass(frozen=True)
class LinkResult:
    link: str
    trials: int
    max_rel_diff: float
    min_order: float | None
    passed: bool
    worst: dict | None

    def to_dict(self) -> dict:
        return {"link": self.link, "trials": self.trials, "max_rel_diff": self.max_rel_diff,
                "min_order": self.min_order, "pass": self.passed, "worst": self.worst}


def _rel(x: float, y: float) -> float:
    return abs(x - y) / max(abs(x), abs(y), 1.0)


def link_discrepancy(link: ReductionLink, inst: InequalityInstance) -> float:
    """Largest relative difference between the specialized source and the target."""
    inst = link.specialize(inst)
    (sl, sr), (tl, tr) = link.pair(inst)
    return max(_rel(sl, tl), _rel(sr, tr))


def limit_orders(link: ReductionLink, inst: InequalityInstance,
                 steps: tuple[float, ...] = LIMIT_STEPS) -> tuple[float, float]:
    """Observed convergence order of the R -> 1 difference quotients (lhs and rhs).

    Returns ``(min order, final relative error)``.  Quotients that already
    agree with the limit to rounding level count as order ``inf``.
    """
    inst = link.specialize(inst)
    tl, tr = _sides(link.target, inst.replace(R=1.0))
    errs_l, errs_r = [], []
    for h in steps:
        sl, sr = _sides(link.source, inst.replace(R=1.0 + h))
        errs_l.append(_rel(sl / h, tl))
        errs_r.append(_rel(sr / h, tr))
    orders = []
    for errs in (errs_l, errs_r):
        for (h1, e1), (h2, e2) in zip(zip(steps, errs), zip(steps[1:], errs[1:])):
            if e2 <= 1e-9 or e1 <= 1e-9:
                orders.append(math.inf)
            else:
                orders.append(math.log(e1 / e2) / math.log(h1 / h2))
    return min(orders), max(errs_l[-1], errs_r[-1])


def reduction_check(link_id: str, trials: int = 1000, seed: int = 0,
                    degree_range: tuple[int, int] = (1, 12), rtol: float = LINK_RTOL,
                    raise_on_mismatch: bool = True) -> LinkResult:
    """Check a reduction link on ``trials`` random instances of the source hypothesis."""
    from .harness.generators import GeneratorSpec, generate_many

    link = LINKS[link_id]
    source = get_entry(link.source)
    spec = GeneratorSpec(source.hypothesis, degree_range, seed=seed)
    worst_val, worst_inst, min_order = 0.0, None, None
    for inst in generate_many(spec, trials, entry=link.source):
        if link.limit:
            order, err = limit_orders(link, inst)
            bad = order < MIN_ORDER
            val = err
            min_order = order if min_order is None else min(min_order, order)
        else:
            val = link_discrepancy(link, inst)
            bad = val > rtol
        if val >= worst_val:
            worst_val, worst_inst = val, inst
        if bad:
            res = LinkResult(link_id, trials, val, min_order, False,
                             link.specialize(inst).to_dict())
            if raise_on_mismatch:
                raise LinkMismatch(f"{link_id}: discrepancy {val:.3e}", res.worst)
            return res
    return LinkResult(link_id, trials, worst_val, min_order, True,
                      None if worst_inst is None else link.specialize(worst_inst).to_dict())


def list_links() -> list[dict]:
    return [l.describe() for l in _LINKS]
