import math

import numpy as np
import pytest

from hadamard6.family import FamilyPoint, Regime, classify_regime
from hadamard6.moebius import curve_a, curve_b

ACCEPTANCE_LINES: list[str] = []


def random_phases(rng, n=6):
    return np.exp(2j * np.pi * rng.uniform(size=n))


def scramble(h, rng):
    """Random D2 P2 h P1 D1."""
    p, q = rng.permutation(6), rng.permutation(6)
    return random_phases(rng)[:, None] * h[p][:, q] * random_phases(rng)[None, :]


def random_generic_point(rng, margin=0.05):
    while True:
        th, ph, ps = rng.uniform(0, math.pi, 3)
        fp = FamilyPoint(th, ph, ps)
        if min(abs(curve_a(fp.lam)), abs(curve_b(fp.lam))) >= margin:
            assert classify_regime(fp.lam) is Regime.Generic
            return fp


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


@pytest.fixture
def acceptance():
    def record(number, passed, detail):
        ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {detail}")
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
