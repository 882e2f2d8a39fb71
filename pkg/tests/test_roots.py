import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from modsmirnov.polynomial import ComplexPolynomial
from modsmirnov.roots import (
    EPS_LOC,
    Unconverged,
    ZeroClass,
    cauchy_bound,
    classify_zeros,
    find_roots,
    from_roots,
)

P = ComplexPolynomial


def _match(found, true):
    """Max distance under the best greedy pairing."""
    found = list(found)
    worst = 0.0
    for r in true:
        d = np.abs(np.asarray(found) - r)
        i = int(d.argmin())
        worst = max(worst, d[i])
        found.pop(i)
    return worst


def test_from_roots_examples():
    assert from_roots([1j, -1j]).allclose(P([1, 0, 1]), 1e-15)
    assert from_roots([], 3) == P([3])
    with pytest.raises(ValueError):
        from_roots([1], 0)


def test_known_roots():
    rs = find_roots(P([1, 0, 1]))
    assert rs.converged and _match(rs.roots, [1j, -1j]) < 1e-12
    rs = find_roots(from_roots([0.5, -0.5j]))
    assert _match(rs.roots, [0.5, -0.5j]) < 1e-8


def test_double_root_clusters():
    rs = find_roots(from_roots([1, 1, -1]))
    assert _match(rs.roots, [1, 1, -1]) < 1e-4


def test_linear_and_constant():
    rs = find_roots(P([2, 4]))
    assert rs.roots[0] == -0.5 and rs.method == "linear"
    with pytest.raises(ValueError):
        find_roots(P([3]))


def test_sparse_monomial():
    rs = find_roots(P.monomial(6))
    assert rs.converged and np.max(np.abs(rs.roots)) < 1e-2


def test_unconverged_raised_when_starved():
    p = from_roots(np.exp(2j * np.pi * np.arange(12) / 12) * 0.9)
    with pytest.raises(Unconverged) as info:
        find_roots(p, max_iter=1)
    assert info.value.rootset is not None
    assert not find_roots(p, max_iter=1, strict=False).converged


def test_round_trip_and_vieta(rng):
    worst = worst_vieta = 0.0
    for _ in range(100):
        n = int(rng.integers(2, 13))
        while True:
            r = (0.2 + 1.3 * rng.random(n)) * np.exp(2j * np.pi * rng.random(n))
            d = np.abs(r[:, None] - r[None, :]) + np.eye(n)
            if d.min() > 0.1:
                break
        p = from_roots(r, 1 + 1j)
        rs = find_roots(p)
        worst = max(worst, _match(rs.roots, r))
        prod = np.prod(np.abs(rs.roots))
        vieta = abs(p.coeffs[0] / p.coeffs[-1])
        worst_vieta = max(worst_vieta, abs(prod - vieta) / vieta)
    assert worst < 1e-8 and worst_vieta < 1e-8


def test_cauchy_bound_encloses(rng):
    for _ in range(20):
        c = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        assert np.all(np.abs(find_roots(P(c)).roots) <= cauchy_bound(c) + 1e-9)


def test_classification_examples():
    assert classify_zeros(from_roots([0.3, 0.7])).kind == ZeroClass.ALL_IN_CLOSED_DISK
    loc = classify_zeros(P([1, 0, 0, 0, 1]))
    assert loc.all_in_closed_disk and loc.none_in_open_disk and loc.boundary_flag
    loc = classify_zeros(from_roots([0.5, 2.0]))
    assert loc.kind == ZeroClass.MIXED
    assert classify_zeros(P([4])).none_in_open_disk
    assert classify_zeros(from_roots([0.3, 0.5])).all_in_radius(0.5)
    assert not classify_zeros(from_roots([0.3, 0.5 + 1e-6])).all_in_radius(0.5)


def test_classification_rejects_unconverged_roots():
    p = from_roots([0.1, 0.2, 0.3])
    bad = find_roots(p, max_iter=1, strict=False)
    if not bad.converged:
        with pytest.raises(Unconverged):
            classify_zeros(p, bad)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10), st.integers(0, 2**32 - 1))
def test_reciprocal_swaps_class(n, seed):
    rng = np.random.default_rng(seed)
    mods = 0.05 + 0.9 * rng.random(n)
    r = mods * np.exp(2j * np.pi * rng.random(n))
    p = from_roots(r)
    assert classify_zeros(p).kind == ZeroClass.ALL_IN_CLOSED_DISK
    q = p.conjugate_reciprocal(n)
    assert classify_zeros(q).kind == ZeroClass.NONE_IN_OPEN_DISK
    assert np.min(np.abs(find_roots(q).roots)) >= 1 + 0.04 - EPS_LOC
