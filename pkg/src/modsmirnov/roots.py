"""Simultaneous root finding and zero-location classification.

All roots are iterated together (Aberth-Ehrlich, falling back to
Durand-Kerner when Aberth stalls); there is no deflation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .polynomial import ComplexPolynomial, as_polynomial, horner

EPS_RES = 1e-8
EPS_LOC = 1e-9
STEP_TOL = 1e-14
MAX_ITER = 500


class Unconverged(ArithmeticError):
    """Root iteration finished with residuals above ``EPS_RES``."""

    def __init__(self, message: str, rootset: "RootSet | None" = None):
        super().__init__(message)
        self.rootset = rootset


@dataclass(frozen=True)
class RootSet:
    roots: np.ndarray
    residuals: np.ndarray
    converged: bool
    iterations: int
    method: str

    def __len__(self) -> int:
        return len(self.roots)

    @property
    def moduli(self) -> np.ndarray:
        return np.abs(self.roots)


def from_roots(roots, leading: complex = 1.0) -> ComplexPolynomial:
    """Expand ``leading * prod(z - r)`` by repeated convolution."""
    if leading == 0:
        raise ValueError("leading coefficient must be nonzero")
    c = np.array([complex(leading)], dtype=np.complex128)
    for r in np.atleast_1d(np.asarray(roots, dtype=np.complex128)):
        c = np.concatenate(([0.0], c)) - r * np.concatenate((c, [0.0]))
    return ComplexPolynomial(c, trim=False)


def cauchy_bound(c: np.ndarray) -> float:
    return 1.0 + float(np.max(np.abs(c[:-1] / c[-1])))


def _residuals(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    # backward-error scaling |P(r)| / sum |c_k| |r|^k, floored by max |c_k| so that
    # sparse polynomials (z**n at r ~ 0) are not judged by 0/0
    val = np.abs(horner(c, z))
    scale = horner(np.abs(c).astype(np.complex128), np.abs(z)).real + np.abs(c).max()
    return val / scale


def _initial_guess(c: np.ndarray) -> np.ndarray:
    n = len(c) - 1
    radius = cauchy_bound(c)
    k = np.arange(n)
    return radius * np.exp(1j * (2 * np.pi * k / n + 0.4))


def _powers(z: np.ndarray, n: int) -> np.ndarray:
    """Rows ``[1, z, ..., z**n]`` for every entry of ``z``."""
    out = np.empty((len(z), n + 1), dtype=np.complex128)
    out[:, 0] = 1.0
    for k in range(1, n + 1):
        out[:, k] = out[:, k - 1] * z
    return out


def _stalled(history: list[float]) -> bool:
    # rounding noise: the update stopped shrinking while already tiny
    return len(history) >= 4 and history[-1] < 1e-7 and history[-1] >= min(history[-4:-1])


def _aberth(c: np.ndarray, z: np.ndarray, max_iter: int):
    n = len(z)
    dc = c[1:] * np.arange(1, n + 1)
    eye = np.eye(n, dtype=bool)
    history: list[float] = []
    for it in range(1, max_iter + 1):
        pw = _powers(z, n)
        pz = pw @ c
        dpz = pw[:, :-1] @ dc
        with np.errstate(divide="ignore", invalid="ignore"):
            w = pz / dpz
            diff = z[:, None] - z[None, :]
            diff[eye] = 1.0
            s = (1.0 / diff).sum(axis=1) - 1.0
            step = w / (1.0 - w * s)
        step = np.where(pz == 0, 0.0, step)
        if not np.all(np.isfinite(step)):
            return z, it, False
        z = z - step
        history.append(float(np.max(np.abs(step) / np.maximum(1.0, np.abs(z)))))
        if history[-1] < STEP_TOL or _stalled(history):
            return z, it, True
    return z, max_iter, False


def _durand_kerner(c: np.ndarray, z: np.ndarray, max_iter: int):
    n = len(z)
    eye = np.eye(n, dtype=bool)
    history: list[float] = []
    for it in range(1, max_iter + 1):
        diff = z[:, None] - z[None, :]
        diff[eye] = 1.0
        with np.errstate(divide="ignore", invalid="ignore"):
            step = (_powers(z, n) @ c) / (c[-1] * diff.prod(axis=1))
        if not np.all(np.isfinite(step)):
            return z, it, False
        z = z - step
        history.append(float(np.max(np.abs(step) / np.maximum(1.0, np.abs(z)))))
        if history[-1] < STEP_TOL or _stalled(history):
            return z, it, True
    return z, max_iter, False


def find_roots(p, max_iter: int = MAX_ITER, strict: bool = True) -> RootSet:
    """All ``deg p`` roots of ``p``.

    Raises :class:`Unconverged` when some residual exceeds ``EPS_RES`` unless
    ``strict`` is false, in which case the RootSet is returned with
    ``converged=False``.
    """
    p = as_polynomial(p)
    n = p.degree
    if n < 1:
        raise ValueError("find_roots needs degree >= 1")
    c = p.coeffs
    if n == 1:
        z = np.array([-c[0] / c[1]])
        res = _residuals(c, z)
        return RootSet(z, res, True, 0, "linear")

    z0 = _initial_guess(c)
    z, its, _ = _aberth(c, z0, max_iter)
    method = "aberth"
    res = _residuals(c, z) if np.all(np.isfinite(z)) else np.full(n, np.inf)
    if not np.all(res <= EPS_RES):
        z_dk, its_dk, _ = _durand_kerner(c, z0, max_iter)
        res_dk = _residuals(c, z_dk) if np.all(np.isfinite(z_dk)) else np.full(n, np.inf)
        if np.max(res_dk) < np.max(res):
            z, its, res, method = z_dk, its + its_dk, res_dk, "durand-kerner"
    converged = bool(np.all(res <= EPS_RES))
    rs = RootSet(z, res, converged, its, method)
    if strict and not converged:
        raise Unconverged(f"max residual {np.max(res):.3e} exceeds {EPS_RES:g}", rs)
    return rs


class ZeroClass(enum.Flag):
    MIXED = 0
    ALL_IN_CLOSED_DISK = enum.auto()
    NONE_IN_OPEN_DISK = enum.auto()


@dataclass(frozen=True)
class ZeroLocation:
    kind: ZeroClass
    max_modulus: float
    min_modulus: float
    boundary_flag: bool

    @property
    def all_in_closed_disk(self) -> bool:
        return ZeroClass.ALL_IN_CLOSED_DISK in self.kind

    @property
    def none_in_open_disk(self) -> bool:
        return ZeroClass.NONE_IN_OPEN_DISK in self.kind

    def all_in_radius(self, k: float) -> bool:
        return self.max_modulus <= k + EPS_LOC


def classify_zeros(p, roots: RootSet | None = None) -> ZeroLocation:
    """Zero-location class of ``p`` with tolerance ``EPS_LOC`` around the unit circle."""
    p = as_polynomial(p)
    if p.degree < 1:
        return ZeroLocation(ZeroClass.NONE_IN_OPEN_DISK, 0.0, np.inf, False)
    if roots is None:
        roots = find_roots(p)
    elif not roots.converged:
        raise Unconverged("classification needs a converged root set", roots)
    mods = roots.moduli
    hi, lo = float(mods.max()), float(mods.min())
    kind = ZeroClass.MIXED
    if hi <= 1 + EPS_LOC:
        kind |= ZeroClass.ALL_IN_CLOSED_DISK
    if lo >= 1 - EPS_LOC:
        kind |= ZeroClass.NONE_IN_OPEN_DISK
    boundary = bool(np.any(np.abs(mods - 1.0) <= EPS_LOC))
    return ZeroLocation(kind, hi, lo, boundary)
