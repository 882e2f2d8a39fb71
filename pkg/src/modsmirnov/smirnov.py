"""The modified Smirnov operator and the composite expressions built from it.

``modified_smirnov(P, a, n)`` is ``(1 + a z) P'(z) - n a P(z)``.  The degree
class ``n`` is a caller-controlled parameter: for a polynomial treated as a
member of a degree-``n`` family it must be passed explicitly.  The coefficient
of ``z**n`` cancels exactly, so the result always has length ``n``.

Composite expressions of the form

    S[P](R z) - alpha S[P](z) + kappa S[P](z),
    kappa = beta * (((R + 1) / 2)**n - |alpha|),

read ``S[P](R z)`` as the operator applied to the dilated polynomial
``z -> P(R z)``.  :func:`composite_value` also exposes the other reading
(operator output evaluated at the point ``R z``) for comparison.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .polynomial import ComplexPolynomial, as_polynomial

DISK_TOL = 1e-12
BOUNDARY_TOL = 1e-9


class BoundaryParameterWarning(UserWarning):
    """Operator parameter on the unit circle, where zero-location claims are diagnostic only."""


def _degree_class(p: ComplexPolynomial, n: int | None) -> int:
    if n is None:
        return p.degree
    n = int(n)
    if n < p.degree:
        raise ValueError(f"degree class n={n} is below deg P={p.degree}")
    return n


def _check_disk(name: str, value: complex) -> None:
    if abs(value) > 1 + DISK_TOL:
        raise ValueError(f"|{name}| = {abs(value):.17g} exceeds 1")


@dataclass(frozen=True)
class OperatorContext:
    """Operator parameter ``a`` (closed unit disk) and degree class ``n``."""

    a: complex
    n: int

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        _check_disk("a", self.a)
        if self.n < 1:
            raise ValueError("degree class must be a positive integer")

    @property
    def boundary(self) -> bool:
        return abs(abs(self.a) - 1.0) <= BOUNDARY_TOL

    def apply(self, p) -> ComplexPolynomial:
        return modified_smirnov(p, self.a, self.n)


def kappa(alpha: complex, beta: complex, R: float, n: int) -> complex:
    """``beta * (((R+1)/2)**n - |alpha|)``.  Uses the modulus of alpha, never alpha."""
    return complex(beta) * (((R + 1.0) / 2.0) ** n - abs(alpha))


@dataclass(frozen=True)
class CompositeParams:
    alpha: complex = 0.0
    beta: complex = 0.0
    R: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        object.__setattr__(self, "R", float(self.R))
        _check_disk("alpha", self.alpha)
        _check_disk("beta", self.beta)
        if self.R < 1.0:
            raise ValueError(f"R = {self.R} must be >= 1")

    def kappa(self, n: int) -> complex:
        return kappa(self.alpha, self.beta, self.R, n)

    def outer_factor(self, n: int) -> complex:
        """``R**n - alpha + kappa``: the multiplier a monomial of degree n picks up."""
        return self.R**n - self.alpha + self.kappa(n)

    def inner_factor(self, n: int) -> complex:
        """``1 - alpha + kappa``: the multiplier a constant picks up."""
        return 1.0 - self.alpha + self.kappa(n)


def smirnov_coeffs(c: np.ndarray, a: complex, n: int) -> np.ndarray:
    """Coefficients of ``(1+az)P' - naP`` from the length-(n+1) vector ``c``.

    Entry k is ``(k+1) c[k+1] + a (k - n) c[k]`` for k < n; the z**n entry is
    identically zero and is not returned.
    """
    k = np.arange(n)
    return (k + 1) * c[1:] + a * (k - n) * c[:-1]


def modified_smirnov(p, a: complex, n: int | None = None) -> ComplexPolynomial:
    p = as_polynomial(p)
    n = _degree_class(p, n)
    if n == 0:
        return ComplexPolynomial.zero()
    return ComplexPolynomial(smirnov_coeffs(p.padded(n), complex(a), n))


def smirnov_alpha(p, alpha: complex, n: int | None = None) -> ComplexPolynomial:
    """The classical Smirnov operator ``z P'(z) - n alpha P(z)``."""
    p = as_polynomial(p)
    n = _degree_class(p, n)
    c = p.padded(n)
    return ComplexPolynomial((np.arange(n + 1) - n * complex(alpha)) * c)


@dataclass(frozen=True)
class OmegaRegion:
    """Image of the disk ``|t| < radius`` under ``t -> t / (t + 1)``."""

    radius: float

    def __post_init__(self):
        if self.radius < 1 - DISK_TOL:
            raise ValueError("radius must be >= 1")

    def contains(self, alpha: complex) -> bool:
        return omega_contains(self.radius, alpha)


def phi(t: complex) -> complex:
    return t / (t + 1)


def omega_contains(region, alpha: complex) -> bool:
    """Membership of ``alpha`` in the closure of the phi-image of ``|t| < radius``.

    ``alpha = 1`` is the image of t = infinity and is never contained.
    """
    radius = region.radius if isinstance(region, OmegaRegion) else float(region)
    alpha = complex(alpha)
    if alpha == 1:
        return False
    return abs(alpha / (1 - alpha)) <= radius * (1 + DISK_TOL)


def composite_coeffs(c: np.ndarray, a: complex, n: int, alpha, beta, R) -> np.ndarray:
    """Coefficients of the dilation-reading composite, from a padded vector ``c``."""
    kap = kappa(alpha, beta, R, n)
    dilated = c * (float(R) ** np.arange(n + 1))
    return smirnov_coeffs(dilated - (complex(alpha) - kap) * c, complex(a), n)


def composite_transform(p, a: complex, alpha: complex = 0.0, beta: complex = 0.0,
                        R: float = 1.0, n: int | None = None) -> ComplexPolynomial:
    """``S[P_R](z) - alpha S[P](z) + kappa S[P](z)`` with ``P_R(z) = P(R z)``.

    Both operator applications share the degree class ``n``.
    """
    p = as_polynomial(p)
    n = _degree_class(p, n)
    if n == 0:
        return ComplexPolynomial.zero()
    return ComplexPolynomial(composite_coeffs(p.padded(n), a, n, alpha, beta, R))


def composite_value(p, a: complex, alpha: complex, beta: complex, R: float, z: complex,
                    n: int | None = None, reading: str = "dilation") -> complex:
    """Value of the composite expression at ``z`` under either reading of ``S[P](Rz)``.

    ``reading="dilation"`` applies the operator to ``P(R z)``; ``reading="point"``
    evaluates ``S[P]`` at the point ``R z``.
    """
    p = as_polynomial(p)
    n = _degree_class(p, n)
    if reading == "dilation":
        return composite_transform(p, a, alpha, beta, R, n)(z)
    if reading != "point":
        raise ValueError(f"unknown reading {reading!r}")
    s = modified_smirnov(p, a, n)
    return s(R * z) - alpha * s(z) + kappa(alpha, beta, R, n) * s(z)


def corollary_limit_lhs(p, a: complex, beta: complex, n: int | None = None) -> ComplexPolynomial:
    """``z S[P'](z) + (n/2) beta S[P](z) + P'(z)``, inner operator at degree class n-1.

    This is the limit of the alpha = 1 composite divided by ``R - 1`` as R -> 1.
    """
    p = as_polynomial(p)
    n = _degree_class(p, n)
    if n < 1 or p.degree < 1:
        raise ValueError("needs a non-constant polynomial")
    dp = p.derivative()
    inner = modified_smirnov(dp, a, n - 1)
    shifted = ComplexPolynomial(np.concatenate(([0.0], inner.coeffs)))
    return shifted + modified_smirnov(p, a, n) * (0.5 * n * complex(beta)) + dp


def reduction_a_inv_z(p, z: complex, n: int | None = None) -> complex:
    """``S_{-1/z}[P]`` evaluated at ``z``; equals ``n P(z) / z`` since ``1 + a z`` vanishes."""
    p = as_polynomial(p)
    n = _degree_class(p, n)
    z = complex(z)
    if abs(z) < 1 - DISK_TOL:
        raise ValueError(f"|z| = {abs(z)} < 1 puts a = -1/z outside the closed disk")
    return modified_smirnov(p, -1.0 / z, n)(z)


def warn_if_boundary(a: complex) -> bool:
    if abs(abs(a) - 1.0) <= BOUNDARY_TOL:
        warnings.warn(f"a = {a} lies on the unit circle; zero-location claims are diagnostic",
                      BoundaryParameterWarning, stacklevel=2)
        return True
    return False
