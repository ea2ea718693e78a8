"""Seeded random instances in general position."""
from __future__ import annotations

from enum import Enum

import numpy as np

from .errors import GenerationFailed
from .geometry import PointSet, convex_hull, find_general_position_violation

CIRCLE_JITTER = 1e-9
CLUSTER_SIGMA = 0.05
MAX_RETRIES = 100
# above this size the O(n^2 log n) collinearity scan is skipped by default
CHECK_MAX_N = 5000


class Distribution(str, Enum):
    UNIFORM_SQUARE = "UNIFORM_SQUARE"
    CIRCLE = "CIRCLE"
    CLUSTERS = "CLUSTERS"
    CONVEX = "CONVEX"


_CODES = {d: k for k, d in enumerate(Distribution)}


def _uniform(rng, n):
    return rng.random((n, 2))


def _circle(rng, n):
    t = 2 * np.pi * np.arange(n) / n
    xy = np.c_[np.cos(t), np.sin(t)]
    return xy + rng.uniform(-CIRCLE_JITTER, CIRCLE_JITTER, (n, 2))


def _clusters(rng, n):
    k = max(1, min(n, int(round(np.sqrt(n) / 2))))
    centers = rng.random((k, 2))
    lab = rng.integers(0, k, n)
    return centers[lab] + CLUSTER_SIGMA * rng.standard_normal((n, 2))


def _convex(rng, n):
    t = np.sort(rng.random(n) * 2 * np.pi)
    a, b = 1.0, 0.5 + 0.5 * rng.random()
    return np.c_[a * np.cos(t), b * np.sin(t)]


_MAKERS = {
    Distribution.UNIFORM_SQUARE: _uniform,
    Distribution.CIRCLE: _circle,
    Distribution.CLUSTERS: _clusters,
    Distribution.CONVEX: _convex,
}


def generate(dist, n: int, seed: int, check: bool | None = None) -> PointSet:
    """Deterministic instance for ``(dist, n, seed)``.

    Offending points (duplicates, collinear triples, and for CONVEX points
    off the hull) are redrawn from the same stream up to ``MAX_RETRIES``
    times.  ``check=None`` runs the general-position scan only up to
    ``CHECK_MAX_N`` points.
    """
    dist = Distribution(dist)
    if n < 2:
        raise ValueError("n must be at least 2")
    if check is None:
        check = n <= CHECK_MAX_N
    rng = np.random.default_rng([int(seed), _CODES[dist]])
    make = _MAKERS[dist]
    xy = make(rng, n)
    for _ in range(MAX_RETRIES):
        s = PointSet(xy, validate=False)
        bad = _offender(s, dist, check)
        if bad is None:
            return s
        if dist in (Distribution.CIRCLE, Distribution.CONVEX):
            # redraw the whole shape; single replacements would break the pattern
            xy = make(rng, n)
        else:
            xy = xy.copy()
            xy[bad] = make(rng, n)[bad]
    raise GenerationFailed(f"{dist.value} n={n} seed={seed}: no general position after {MAX_RETRIES} retries")


def _offender(s: PointSet, dist, check):
    if check:
        bad = find_general_position_violation(s)
        if bad is not None:
            return max(bad[1])
    if dist is Distribution.CONVEX and convex_hull(s).h != s.n:
        on = set(convex_hull(s).hull)
        return next(i for i in range(s.n) if i not in on)
    return None
