import sys

import numpy as np
import pytest

from modsmirnov.polynomial import ComplexPolynomial
from modsmirnov.roots import from_roots


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def random_disk_poly(rng, n, radius=1.0):
    r = radius * np.sqrt(rng.random(n)) * np.exp(2j * np.pi * rng.random(n))
    return from_roots(r, np.exp(2j * np.pi * rng.random()))


def random_poly(rng, n):
    return ComplexPolynomial(rng.standard_normal(n + 1) + 1j * rng.standard_normal(n + 1))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
