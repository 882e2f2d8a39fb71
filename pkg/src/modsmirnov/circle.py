"""Certified maximum and minimum of |P| on the unit circle.

The certificates come from Bernstein's inequality.  On the circle
``theta -> |P(e^{i theta})|`` is Lipschitz with constant ``n M``, and
``g = |P|^2`` is a real trigonometric polynomial of degree n, so its fourth
derivative is bounded by ``n^4 M^2``.  Each grid cell is bounded both by the
Lipschitz estimate and by the cubic Taylor model of g at the cell centre plus
that quartic remainder.  The grid starts at ``N >= max(4096, 64 n)``
points (evaluated by FFT); only cells whose bound could still beat the
incumbent are bisected, which amounts to doubling N locally, up to an
effective ``N = 2**22``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from .polynomial import as_polynomial, horner

N_MIN = 4096
N_CAP = 2**22
MAX_ACTIVE = 200_000
NEAR_ZERO = 1e-6
_EPS = np.finfo(float).eps


class TolValueUnreachable(ArithmeticError):
    """Certificate did not reach the requested tolerance before the grid cap."""

    def __init__(self, message: str, extremum: "CircleExtremum"):
        super().__init__(message)
        self.extremum = extremum


@dataclass(frozen=True)
class CircleExtremum:
    """``value`` is attained at ``theta``; the true extremum lies within ``error_bound``.

    For a maximum the true value is in ``[value, value + error_bound]``, for a
    minimum in ``[value - error_bound, value]`` (up to rounding, which is
    folded into ``error_bound``).
    """

    value: float
    theta: float
    error_bound: float
    kind: str
    converged: bool = True
    evaluations: int = 0

    @property
    def upper(self) -> float:
        return self.value + self.error_bound if self.kind == "max" else self.value

    @property
    def lower(self) -> float:
        return self.value if self.kind == "max" else max(self.value - self.error_bound, 0.0)


def initial_grid_size(n: int) -> int:
    target = max(N_MIN, 64 * n)
    return 1 << (target - 1).bit_length()


def grid_values(coeffs: np.ndarray, N: int) -> np.ndarray:
    """``P(exp(2 pi i k / N))`` for k = 0..N-1."""
    if len(coeffs) > N:
        folded = np.zeros(N, dtype=np.complex128)
        np.add.at(folded, np.arange(len(coeffs)) % N, coeffs)
        coeffs = folded
    return np.fft.ifft(coeffs, N) * N


def rounding_allowance(coeffs: np.ndarray, N: int) -> float:
    n = len(coeffs) - 1
    return 4 * _EPS * (math.log2(N) + n + 1) * float(np.abs(coeffs).sum())


def _theta_derivative_coeffs(coeffs: np.ndarray):
    k = np.arange(len(coeffs))
    ik = 1j * k
    return coeffs, ik * coeffs, ik**2 * coeffs, ik**3 * coeffs


class _SquaredModulus:
    """``g(theta) = |P(e^{i theta})|^2`` with its first three theta-derivatives."""

    def __init__(self, coeffs: np.ndarray):
        self.parts = _theta_derivative_coeffs(coeffs)
        self._stack = np.stack(self.parts, axis=1)
        self._k = np.arange(len(coeffs))

    @staticmethod
    def _combine(p0, p1, p2, p3):
        g0 = (p0 * p0.conj()).real
        g1 = 2 * (p1 * p0.conj()).real
        g2 = 2 * ((p1 * p1.conj()).real + (p2 * p0.conj()).real)
        g3 = 2 * (p3 * p0.conj()).real + 6 * (p2 * p1.conj()).real
        return g0, g1, g2, g3

    def on_grid(self, N: int):
        return self._combine(*(grid_values(c, N) for c in self.parts))

    def at(self, theta):
        basis = np.exp(1j * np.multiply.outer(np.asarray(theta), self._k))
        vals = basis @ self._stack
        return self._combine(*vals.T)


def _cubic_argmin(g0, g1, g2, g3, r):
    """Minimum of ``g0 + g1 t + g2 t^2/2 + g3 t^3/6`` over ``|t| <= r`` and where it sits."""

    def value(t):
        return g0 + t * (g1 + t * (g2 / 2 + t * g3 / 6))

    lo, hi = value(-r), value(r)
    best = np.minimum(lo, hi)
    arg = np.where(lo <= hi, -r, r)
    # critical points solve g1 + g2 t + g3 t^2 / 2 = 0
    A, B, C = g3 / 2, g2, g1
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        disc = B * B - 4 * A * C
        sq = np.sqrt(np.maximum(disc, 0.0))
        q = -0.5 * (B + np.copysign(sq, B))
        for t in (np.where(A != 0, q / A, np.nan), np.where(q != 0, C / q, np.nan)):
            ok = (disc >= 0) & np.isfinite(t) & (np.abs(t) <= r)
            v = value(np.where(ok, t, 0.0))
            better = ok & (v < best)
            best = np.where(better, v, best)
            arg = np.where(better, t, arg)
    return best, arg


def _cubic_min(g0, g1, g2, g3, r):
    return _cubic_argmin(g0, g1, g2, g3, r)[0]


def _cubic_max(g0, g1, g2, g3, r):
    return -_cubic_min(-g0, -g1, -g2, -g3, r)


def _branch_and_bound(derivs, grid, N, bound, prune, sense):
    """Bisect grid cells until every cell is pruned or the effective grid reaches N_CAP.

    Cells are centred on the grid angles with half-width ``r``.
    ``grid`` holds g and its theta-derivatives at the initial grid angles.
    ``bound(derivs, r, best)`` is the pessimistic extremum of g over each cell
    (it may skip the expensive model where ``best`` already settles a cell);
    ``prune(bounds, best)`` marks the cells that can no longer beat ``best``.
    Returns (best, best_theta, outer_bound, converged, evaluations).
    """
    is_max = sense == "max"
    pick = np.argmax if is_max else np.argmin
    centers = 2 * np.pi * np.arange(N) / N
    r = np.pi / N
    g = grid
    i = int(pick(g[0]))
    best, best_theta = float(g[0][i]), float(centers[i])
    outer = best
    evals = N
    converged = True
    while True:
        b = bound(g, r, best)
        # probe the model extremum of the most promising cell to tighten the incumbent
        k = int(pick(b))
        sign = -1.0 if is_max else 1.0
        _, t = _cubic_argmin(*(sign * x[k] for x in g), r)
        probe = float(centers[k] + t)
        gp = float(derivs(np.array([probe]))[0][0])
        evals += 1
        if (gp > best) if is_max else (gp < best):
            best, best_theta = gp, probe
        done = prune(b, best)
        if np.any(done):
            edge = float(b[done].max()) if is_max else float(b[done].min())
            outer = max(outer, edge) if is_max else min(outer, edge)
        keep = ~done
        n_keep = int(keep.sum())
        if n_keep == 0:
            break
        if np.pi / r >= N_CAP or n_keep > MAX_ACTIVE:
            edge = float(b[keep].max()) if is_max else float(b[keep].min())
            outer = max(outer, edge) if is_max else min(outer, edge)
            converged = False
            break
        r /= 2
        centers = np.concatenate((centers[keep] - r, centers[keep] + r))
        g = derivs(centers)
        evals += len(centers)
        j = int(pick(g[0]))
        if (g[0][j] > best) if is_max else (g[0][j] < best):
            best, best_theta = float(g[0][j]), float(centers[j])
    return best, best_theta, outer, converged, evals


def _golden_polish(coeffs, theta, width, sense):
    """Golden-section search on |P|^2 in a bracket around ``theta``."""
    sign = -1.0 if sense == "max" else 1.0
    cs = [complex(c) for c in coeffs[::-1]]

    def f(t):
        z = complex(math.cos(t), math.sin(t))
        acc = 0j
        for c in cs:
            acc = acc * z + c
        return sign * (acc.real * acc.real + acc.imag * acc.imag)

    a, b, c = theta - width, theta, theta + width
    fa, fb, fc = f(a), f(b), f(c)
    if not (fb < fa and fb < fc):
        return theta, math.sqrt(max(sign * fb, 0.0))
    try:
        t = optimize.golden(f, brack=(a, b, c), tol=1e-9)
    except (ValueError, RuntimeError):
        return theta, math.sqrt(max(sign * fb, 0.0))
    ft = f(t)
    if ft < fb:
        return float(t), math.sqrt(max(sign * ft, 0.0))
    return theta, math.sqrt(max(sign * fb, 0.0))


def _finish(ext: CircleExtremum, tol: float, strict: bool) -> CircleExtremum:
    if strict and not ext.converged:
        raise TolValueUnreachable(
            f"{ext.kind} certificate {ext.error_bound:.3e} above tolerance {tol:g}", ext)
    return ext


def _max_core(coeffs, n, tol, sq=None, grid=None, N=None):
    if N is None:
        N = initial_grid_size(n)
    if sq is None:
        sq = _SquaredModulus(coeffs)
    if grid is None:
        grid = sq.on_grid(N)
    delta = rounding_allowance(coeffs, N)
    # the quartic remainder is bounded by n^4 M^2 r^4 / 24, with M^2 itself the target
    def bound(g, r, best):
        top = np.sqrt(np.maximum(g[0], 0.0)) + delta
        out = (top / (1 - n * r)) ** 2
        open_ = out > best * (1 + tol) ** 2
        if np.any(open_):
            sub = tuple(x[open_] for x in g)
            model = np.sqrt(np.maximum(_cubic_max(*sub, r), 0.0)) + delta
            taylor = (model / math.sqrt(1 - n**4 * r**4 / 24)) ** 2
            out[open_] = np.minimum(out[open_], taylor)
        return out

    def prune(b, best):
        return b <= best * (1 + tol) ** 2

    best, th, outer, conv, evals = _branch_and_bound(sq.at, grid, N, bound, prune, "max")
    th, polished = _golden_polish(coeffs, th, 2 * np.pi / N, "max")
    value = max(math.sqrt(best), polished)
    err = max(math.sqrt(outer) - value, delta)
    conv = conv and err <= tol * max(value, np.finfo(float).tiny) + delta
    return CircleExtremum(value, th % (2 * np.pi), err, "max", bool(conv), evals)


def certified_max_modulus(p, tol: float = 1e-8, strict: bool = False) -> CircleExtremum:
    """Maximum of |P(z)| over |z| = 1 with a Bernstein certificate.

    ``tol`` is relative.  When the certificate cannot reach it the best
    extremum is returned with ``converged=False``, or
    :class:`TolValueUnreachable` is raised if ``strict``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    p = as_polynomial(p)
    c = p.coeffs
    if p.degree == 0:
        return CircleExtremum(abs(complex(c[0])), 0.0, 0.0, "max")
    return _finish(_max_core(c, p.degree, tol), tol, strict)


def _min_core(coeffs, n, tol, m_upper, sq=None, grid=None, N=None):
    if N is None:
        N = initial_grid_size(n)
    if sq is None:
        sq = _SquaredModulus(coeffs)
    if grid is None:
        grid = sq.on_grid(N)
    delta = rounding_allowance(coeffs, N)
    lip = n * m_upper
    remainder = n**4 * m_upper**2 / 24

    def bound(g, r, best):
        root = np.sqrt(np.maximum(g[0], 0.0))
        out = np.maximum(root - lip * r, 0.0)
        incumbent = math.sqrt(max(best, 0.0))
        open_ = out < incumbent - allowance(incumbent)
        if np.any(open_):
            sub = tuple(x[open_] for x in g)
            # rounding in g scales with the local modulus, not with the maximum
            g_delta = 2 * delta * (root[open_] + 2 * lip * r) + delta * delta
            taylor = np.sqrt(np.maximum(_cubic_min(*sub, r) - remainder * r**4 - g_delta, 0.0))
            out[open_] = np.maximum(out[open_], taylor)
        return out**2

    def allowance(best):
        if best < NEAR_ZERO * m_upper:
            return tol * m_upper
        return tol * best

    def prune(b, best):
        root = math.sqrt(max(best, 0.0))
        return np.sqrt(b) >= root - allowance(root)

    best, th, outer, conv, evals = _branch_and_bound(sq.at, grid, N, bound, prune, "min")
    th, polished = _golden_polish(coeffs, th, 2 * np.pi / N, "min")
    value = min(math.sqrt(max(best, 0.0)), polished)
    err = max(value - math.sqrt(max(outer, 0.0)), 0.0) + delta
    # below roughly 1e-5 * max the rounding floor, not the grid, limits the bound
    conv = conv and err <= allowance(value) + 4 * delta
    return CircleExtremum(value, th % (2 * np.pi), err, "min", bool(conv), evals)


def certified_min_modulus(p, tol: float = 1e-8, strict: bool = False,
                          max_extremum: CircleExtremum | None = None) -> CircleExtremum:
    """Minimum of |P(z)| over |z| = 1.

    The remainder and Lipschitz constants need an upper bound on the maximum.
    Without ``max_extremum`` the first-order grid bound
    ``max_grid / (1 - n pi / N)`` is used, which costs nothing beyond the grid.
    Tolerance is relative, switching to ``tol * max`` once the minimum drops
    below ``1e-6 * max``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    p = as_polynomial(p)
    c = p.coeffs
    n = p.degree
    if n == 0:
        return CircleExtremum(abs(complex(c[0])), 0.0, 0.0, "min")
    N = initial_grid_size(n)
    sq = _SquaredModulus(c)
    grid = sq.on_grid(N)
    if max_extremum is None:
        top = math.sqrt(max(float(grid[0].max()), 0.0)) + rounding_allowance(c, N)
        m_upper = top / (1 - n * np.pi / N)
    else:
        m_upper = max_extremum.upper
    return _finish(_min_core(c, n, tol, m_upper, sq, grid, N), tol, strict)


def circle_extrema(p, tol: float = 1e-8) -> tuple[CircleExtremum, CircleExtremum]:
    """(max, min) of |P| on the unit circle sharing one FFT grid."""
    p = as_polynomial(p)
    c = p.coeffs
    n = p.degree
    if n == 0:
        v = abs(complex(c[0]))
        return CircleExtremum(v, 0.0, 0.0, "max"), CircleExtremum(v, 0.0, 0.0, "min")
    N = initial_grid_size(n)
    sq = _SquaredModulus(c)
    grid = sq.on_grid(N)
    mx = _max_core(c, n, tol, sq, grid, N)
    mn = _min_core(c, n, tol, mx.upper, sq, grid, N)
    return mx, mn


def dominance_margin(p, f, tol: float = 1e-12) -> tuple[float, float]:
    """Certified lower bound and observed minimum of ``|F|^2 - |P|^2`` on the circle.

    The difference is a real trigonometric polynomial of degree
    ``n = max(deg P, deg F)``, so its fourth derivative is bounded by
    ``n^4 (max|F|^2 + max|P|^2)``.  A nonnegative lower bound certifies
    ``|P| <= |F|`` on the whole circle.
    """
    p, f = as_polynomial(p), as_polynomial(f)
    n = max(p.degree, f.degree, 1)
    N = initial_grid_size(n)
    mp = certified_max_modulus(p).upper
    mf = certified_max_modulus(f).upper
    h_norm = mp**2 + mf**2
    remainder = n**4 * h_norm / 24
    delta = 2 * (rounding_allowance(p.coeffs, N) * mp + rounding_allowance(f.coeffs, N) * mf)
    sp, sf = _SquaredModulus(p.coeffs), _SquaredModulus(f.coeffs)

    def derivs(theta):
        return tuple(a - b for a, b in zip(sf.at(theta), sp.at(theta)))

    grid = tuple(a - b for a, b in zip(sf.on_grid(N), sp.on_grid(N)))

    def bound(h, r, best):
        return _cubic_min(*h, r) - remainder * r**4 - delta

    def prune(b, best):
        return (b >= 0) | (b >= best - tol * h_norm)

    best, _, outer, _, _ = _branch_and_bound(derivs, grid, N, bound, prune, "min")
    return min(outer, best), best


def max_ratio(p, f, tol: float = 1e-10) -> tuple[float, float]:
    """Largest ``|P|/|F|`` on the circle, located on the grid and polished.

    Returns (value, theta).  ``F`` must not vanish on the circle.
    """
    p, f = as_polynomial(p), as_polynomial(f)
    n = max(p.degree, f.degree, 1)
    N = initial_grid_size(n)
    ratio = np.abs(grid_values(p.coeffs, N)) / np.abs(grid_values(f.coeffs, N))
    k = int(np.argmax(ratio))
    w = 2 * np.pi / N

    def neg(t):
        z = np.exp(1j * t)
        return -abs(horner(p.coeffs, z)) / abs(horner(f.coeffs, z))

    t0 = 2 * np.pi * k / N
    res = optimize.minimize_scalar(neg, bounds=(t0 - w, t0 + w), method="bounded",
                                   options={"xatol": tol})
    if -res.fun > ratio[k]:
        return float(-res.fun), float(res.x)
    return float(ratio[k]), t0
