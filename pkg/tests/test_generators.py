import numpy as np
import pytest

from modsmirnov import circle
from modsmirnov.catalog import Hypothesis
from modsmirnov.harness import generators as gen
from modsmirnov.roots import ZeroClass, classify_zeros, find_roots
from modsmirnov.smirnov import omega_contains

H = Hypothesis


def _draws(h, count, seed=42, degree_range=(1, 12), entry=None, **kw):
    spec = gen.GeneratorSpec(h, degree_range, seed=seed, **kw)
    return list(gen.generate_many(spec, count, entry=entry))


def test_closed_disk_class():
    for inst in _draws(H.ALL_ZEROS_IN_CLOSED_DISK, 400, degree_range=(3, 3)):
        loc = classify_zeros(inst.p)
        assert loc.kind == ZeroClass.ALL_IN_CLOSED_DISK
        assert loc.max_modulus <= 1 - gen.DELTA_GEN / 2


def test_no_zeros_class():
    for inst in _draws(H.NO_ZEROS_IN_OPEN_DISK, 400):
        assert np.min(np.abs(find_roots(inst.p).roots)) >= 1 + gen.DELTA_GEN / 2


def test_radius_k_class():
    for inst in _draws(H.ZEROS_IN_RADIUS_K, 200):
        assert classify_zeros(inst.p).all_in_radius(inst.k)


def test_dominated_pairs():
    for inst in _draws(H.DOMINATED_PAIR, 100, degree_range=(1, 8)):
        assert inst.p.degree <= inst.f.degree == inst.degree_class
        margin, _ = circle.dominance_margin(inst.p, inst.f)
        assert margin >= 0
        assert np.max(np.abs(find_roots(inst.f).roots)) <= gen.PAIR_ROOT_CAP


def test_parameter_domains():
    for inst in _draws(H.ALL_ZEROS_IN_CLOSED_DISK, 300, entry="thm1-2.1"):
        assert abs(inst.a) <= 1 and abs(inst.alpha) <= 1 and abs(inst.beta) <= 1
        assert 1 <= inst.R <= 3 and 1 <= abs(inst.z) <= 2
    for inst in _draws(H.DOMINATED_PAIR, 30, entry="smirnov-thmB-1.7", degree_range=(1, 5)):
        assert omega_contains(abs(inst.z), inst.alpha)
    for inst in _draws(H.ALL_ZEROS_IN_CLOSED_DISK, 30, entry="lemma2-zeros"):
        assert abs(abs(inst.a) - 1) < 1e-12


def test_boundary_law():
    for inst in _draws(H.ALL_ZEROS_IN_CLOSED_DISK, 50, entry="thm1-2.1", param_law="boundary"):
        for v in (inst.a, inst.alpha, inst.beta, inst.z):
            assert abs(v) == pytest.approx(1)
    with pytest.raises(ValueError):
        gen.GeneratorSpec(H.UNRESTRICTED, param_law="edgy")


def test_streams_are_replayable():
    spec = gen.GeneratorSpec(H.NO_ZEROS_IN_OPEN_DISK, seed=9)
    a = gen.generate(spec, gen.trial_rng(9, 17), "thm2-2.3")
    b = gen.generate(spec, gen.trial_rng(9, 17), "thm2-2.3")
    c = gen.generate(spec, gen.trial_rng(9, 17, 1), "thm2-2.3")
    assert a == b and a != c


def test_spec_validation():
    with pytest.raises(ValueError):
        gen.GeneratorSpec(H.UNRESTRICTED, (0, 3))
    with pytest.raises(ValueError):
        gen.GeneratorSpec(H.UNRESTRICTED, (4, 3))
    with pytest.raises(ValueError):
        gen.GeneratorSpec(H.UNRESTRICTED, delta=0.7)


def test_disk_point_law():
    rng = np.random.default_rng(0)
    pts = np.array([gen.disk_point(rng) for _ in range(20000)])
    assert np.all(np.abs(pts) <= 1)
    # uniform by area: a quarter of the points fall inside radius 1/2
    assert abs(np.mean(np.abs(pts) < 0.5) - 0.25) < 0.02
