import math
import sys
import random

import pytest

from conicred import GeneralConic


def rel_close(a, b, rel=1e-9, scale=None):
    scale = max(abs(a), abs(b), 1.0) if scale is None else scale
    return abs(a - b) <= rel * scale


def conic_close(p, q, rel=1e-9):
    scale = max(max(abs(v) for v in p.coefficients()), max(abs(v) for v in q.coefficients()))
    return all(abs(a - b) <= rel * scale for a, b in zip(p.coefficients(), q.coefficients()))


def random_conic(rng, lo=-10, hi=10):
    return GeneralConic(*(rng.uniform(lo, hi) for _ in range(6)))


@pytest.fixture
def rng():
    return random.Random(20261016)


def pt_close(p, q, tol=1e-9):
    return math.hypot(p[0] - q[0], p[1] - q[1]) <= tol


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
