"""Complex polynomials in double precision.

Coefficients are stored in ascending order: ``coeffs[k]`` multiplies ``z**k``.
Instances are immutable; every operation returns a new polynomial.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

import numpy as np

TRIM_TOL = 1e-12


def _as_coeff_array(coeffs) -> np.ndarray:
    arr = np.array(coeffs, dtype=np.complex128).ravel()
    if arr.size == 0:
        raise ValueError("a polynomial needs at least one coefficient")
    return arr


def trim_coeffs(coeffs: np.ndarray, tol: float = TRIM_TOL) -> np.ndarray:
    """Drop trailing coefficients below ``tol`` times the largest magnitude."""
    mags = np.abs(coeffs)
    top = mags.max()
    if top == 0.0 or not np.isfinite(top):
        if top == 0.0:
            return np.zeros(1, dtype=np.complex128)
        return coeffs
    keep = np.nonzero(mags > tol * top)[0]
    return coeffs[: keep[-1] + 1]


def horner(coeffs: np.ndarray, z):
    """Evaluate ascending ``coeffs`` at ``z`` (scalar or array) by nested multiplication."""
    z = np.asarray(z, dtype=np.complex128)
    acc = np.full(z.shape, coeffs[-1], dtype=np.complex128)
    for c in coeffs[-2::-1]:
        acc = acc * z + c
    if acc.ndim == 0:
        return complex(acc)
    return acc


class ComplexPolynomial:
    """Polynomial with complex coefficients, ascending powers.

    Trailing coefficients smaller than ``TRIM_TOL`` relative to the largest
    coefficient are dropped on construction, so ``degree`` reflects the
    numerically significant leading term.  Pass ``trim=False`` to keep the
    coefficient vector exactly as given.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[complex] | np.ndarray, trim: bool = True):
        arr = _as_coeff_array(coeffs)
        if trim:
            arr = trim_coeffs(arr)
        arr = arr.copy()
        arr.flags.writeable = False
        self._c = arr

    # construction helpers
    @classmethod
    def zero(cls) -> "ComplexPolynomial":
        return cls([0.0])

    @classmethod
    def monomial(cls, n: int, coeff: complex = 1.0) -> "ComplexPolynomial":
        c = np.zeros(n + 1, dtype=np.complex128)
        c[n] = coeff
        return cls(c)

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[float]]) -> "ComplexPolynomial":
        """Build from the ``[[re, im], ...]`` literal used in config and reports."""
        try:
            coeffs = [complex(float(re), float(im)) for re, im in pairs]
        except (TypeError, ValueError) as exc:
            raise ValueError(f"bad polynomial literal: {pairs!r}") from exc
        return cls(coeffs)

    @classmethod
    def from_json(cls, text: str) -> "ComplexPolynomial":
        return cls.from_pairs(json.loads(text))

    def to_pairs(self) -> list[list[float]]:
        return [[float(c.real), float(c.imag)] for c in self._c]

    def to_json(self) -> str:
        return json.dumps(self.to_pairs())

    # basic properties
    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def leading(self) -> complex:
        return complex(self._c[-1])

    def is_zero(self) -> bool:
        return len(self._c) == 1 and self._c[0] == 0

    def padded(self, n: int) -> np.ndarray:
        """Coefficient vector of length ``n + 1`` (degree class ``n``)."""
        if n < self.degree:
            raise ValueError(f"degree class {n} is below degree {self.degree}")
        out = np.zeros(n + 1, dtype=np.complex128)
        out[: len(self._c)] = self._c
        return out

    def __call__(self, z):
        return horner(self._c, z)

    def __len__(self) -> int:
        return len(self._c)

    def __repr__(self) -> str:
        return f"ComplexPolynomial({self._c.tolist()!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, ComplexPolynomial):
            return NotImplemented
        return len(self._c) == len(other._c) and bool(np.all(self._c == other._c))

    def __hash__(self) -> int:
        return hash(self._c.tobytes())

    def allclose(self, other: "ComplexPolynomial", rtol: float = 1e-12) -> bool:
        n = max(self.degree, other.degree)
        a, b = self.padded(n), other.padded(n)
        scale = max(np.abs(a).max(), np.abs(b).max(), np.finfo(float).tiny)
        return bool(np.abs(a - b).max() <= rtol * scale)

    # calculus and transforms
    def derivative(self) -> "ComplexPolynomial":
        if self.degree == 0:
            return ComplexPolynomial.zero()
        k = np.arange(1, len(self._c))
        return ComplexPolynomial(self._c[1:] * k)

    def dilate(self, R: float) -> "ComplexPolynomial":
        """The polynomial ``z -> P(R z)``."""
        return ComplexPolynomial(self._c * (complex(R) ** np.arange(len(self._c))))

    def conjugate_reciprocal(self, n: int | None = None) -> "ComplexPolynomial":
        """``z**n * conj(P(1/conj(z)))``: reverse and conjugate the length-(n+1) vector."""
        if n is None:
            n = self.degree
        return ComplexPolynomial(np.conj(self.padded(n)[::-1]))

    # ring operations
    def __add__(self, other):
        if not isinstance(other, ComplexPolynomial):
            other = ComplexPolynomial([other])
        n = max(self.degree, other.degree)
        return ComplexPolynomial(self.padded(n) + other.padded(n))

    __radd__ = __add__

    def __neg__(self):
        return ComplexPolynomial(-self._c)

    def __sub__(self, other):
        if not isinstance(other, ComplexPolynomial):
            other = ComplexPolynomial([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ComplexPolynomial):
            return ComplexPolynomial(np.convolve(self._c, other._c))
        return ComplexPolynomial(self._c * complex(other))

    __rmul__ = __mul__

    def scale(self, c: complex) -> "ComplexPolynomial":
        return self * complex(c)


def as_polynomial(p) -> ComplexPolynomial:
    if isinstance(p, ComplexPolynomial):
        return p
    return ComplexPolynomial(p)
