import numpy as np
import pytest

from noncross import PointSet

SQUARE = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]


def random_set(rng, n, kind=None):
    """Random general-position set; ``kind`` picks uniform, ring or clustered."""
    kind = int(rng.integers(0, 3)) if kind is None else kind
    while True:
        if kind == 0:
            xy = rng.random((n, 2))
        elif kind == 1:
            t = rng.random(n) * 2 * np.pi
            xy = np.c_[np.cos(t), np.sin(t)] * (0.3 + 0.7 * rng.random((n, 1)))
        else:
            c = rng.random((3, 2))
            xy = c[rng.integers(0, 3, n)] + 0.05 * rng.standard_normal((n, 2))
        try:
            return PointSet(xy)
        except ValueError:
            continue


@pytest.fixture
def square():
    return PointSet(SQUARE)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# criterion number -> one-line verdict, filled by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
