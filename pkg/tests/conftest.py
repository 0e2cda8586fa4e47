import random
import sys
from fractions import Fraction

import pytest

from iet_rauzy.examples import ALPHA, fibonacci_rotation, running_example
from iet_rauzy.qfield import QuadNum


@pytest.fixture
def T():
    return running_example()


@pytest.fixture
def R():
    return fibonacci_rotation()


@pytest.fixture
def a():
    return ALPHA


def q5(p, q=0):
    return QuadNum(Fraction(p), Fraction(q), 5)


def random_point(rng, lo, hi):
    """A point of [lo, hi[ with a genuinely irrational part."""
    while True:
        t = Fraction(rng.randrange(1, 10**6), 10**6)
        z = lo + (hi - lo) * t + q5(0, Fraction(rng.randrange(-50, 50), 10**9))
        if lo <= z < hi:
            return z


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "_results", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
