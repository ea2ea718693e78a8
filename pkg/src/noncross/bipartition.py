"""Balanced linearly separable bipartitions.

A direction ``alpha`` fixes a rotated frame whose x-axis points along
``(cos alpha, sin alpha)``.  The bisecting line is that frame's y-axis: the
points with smaller projection are red, larger are blue, and for odd ``n``
the median point sits on the line.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .errors import ProjectionTie
from .geometry import PointSet

NUDGE = 1e-7
TIE_STEP = 1e-12
TIE_RETRIES = 3


@dataclass(frozen=True)
class BalancedBipartition:
    red: tuple
    blue: tuple
    alpha: float
    anchor: tuple
    on_line_q: int | None = None

    @property
    def line_angle(self) -> float:
        """Direction of the separating line, in ``[0, pi)``."""
        return (self.alpha + math.pi / 2) % math.pi

    @property
    def signature(self) -> tuple:
        r, b = tuple(sorted(self.red)), tuple(sorted(self.blue))
        side = min(r, b)
        return (-1 if self.on_line_q is None else self.on_line_q, side)

    def color_of(self, i: int) -> int:
        """0 for red, 1 for blue, -1 for the on-line point."""
        if i == self.on_line_q:
            return -1
        return 0 if i in self._red_set else 1

    @cached_property
    def _red_set(self):
        return frozenset(self.red)

    def frame_coords(self, s: PointSet, idx=None):
        """Coordinates across (``u``) and along (``v``) the separating line."""
        if idx is None:
            idx = np.arange(s.n)
        ca, sa = math.cos(self.alpha), math.sin(self.alpha)
        px = s.xs[idx] - self.anchor[0]
        py = s.ys[idx] - self.anchor[1]
        return px * ca + py * sa, -px * sa + py * ca


def bisect_by_direction(s: PointSet, alpha: float) -> BalancedBipartition:
    alpha = alpha % math.pi
    ca, sa = math.cos(alpha), math.sin(alpha)
    proj = s.xs * ca + s.ys * sa
    order = np.argsort(proj, kind="stable")
    p = proj[order]
    n = s.n
    tol = 64.0 * np.finfo(float).eps * float(np.abs(proj).max() or 1.0)
    if n % 2 == 0:
        k = n // 2
        if p[k] - p[k - 1] <= tol:
            raise ProjectionTie(f"points {order[k - 1]} and {order[k]} project equally")
        t = 0.5 * (p[k - 1] + p[k])
        anchor = (t * ca, t * sa)
        return BalancedBipartition(
            tuple(sorted(order[:k].tolist())), tuple(sorted(order[k:].tolist())), alpha, anchor
        )
    k = n // 2
    if p[k] - p[k - 1] <= tol or p[k + 1] - p[k] <= tol:
        raise ProjectionTie(f"median point {order[k]} ties with a neighbour")
    q = int(order[k])
    return BalancedBipartition(
        tuple(sorted(order[:k].tolist())),
        tuple(sorted(order[k + 1:].tolist())),
        alpha,
        (float(s.xs[q]), float(s.ys[q])),
        q,
    )


def bisect_with_retry(s: PointSet, alpha: float, retries: int = TIE_RETRIES) -> BalancedBipartition:
    """Bisect, nudging ``alpha`` by ``TIE_STEP`` after each projection tie."""
    for attempt in range(retries + 1):
        try:
            return bisect_by_direction(s, alpha + attempt * TIE_STEP)
        except ProjectionTie:
            if attempt == retries:
                raise
    raise AssertionError("unreachable")


def _candidate_directions(s: PointSet):
    pairs = kernels.halving_pairs(s.xs, s.ys)
    for i, j in pairs.tolist():
        theta = math.atan2(s.ys[j] - s.ys[i], s.xs[j] - s.xs[i])
        alpha = (theta + math.pi / 2) % math.pi
        # nudged directions first: their lines clear both points, so they
        # become the stored representative of each split
        yield alpha - NUDGE
        yield alpha + NUDGE
        yield alpha


def canonical_coloring(bp: BalancedBipartition) -> BalancedBipartition:
    """Same split with red on the lexicographically smaller side.

    Flipping the colours turns ``alpha`` by pi, so red keeps the smaller
    projections.  Path builders are not colour-symmetric, so this makes their
    output depend on the split alone.
    """
    if tuple(sorted(bp.red)) <= tuple(sorted(bp.blue)):
        return bp
    return BalancedBipartition(bp.blue, bp.red, (bp.alpha + math.pi) % (2 * math.pi), bp.anchor, bp.on_line_q)


def _dedupe(s: PointSet, directions):
    found = {}
    for alpha in directions:
        try:
            bp = bisect_with_retry(s, alpha)
        except ProjectionTie:
            # the neighbouring nudged directions cover this candidate
            continue
        found.setdefault(bp.signature, canonical_coloring(bp))
    return [found[k] for k in sorted(found)]


def enumerate_balanced_bipartitions(s: PointSet) -> list[BalancedBipartition]:
    """All distinct balanced bipartitions, sorted by signature.

    Only point pairs whose line splits the remaining points at the median can
    bound a direction interval on which the bisection changes, so the other
    pairs are skipped before any sorting happens.
    """
    return _dedupe(s, _candidate_directions(s))


def angle_grid(epsilon: float, b: float = 1.0) -> list[float]:
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    root = math.sqrt(epsilon)
    out = []
    for i in range(int(math.floor(b / root)) + 1):
        frac = i * root / b
        if frac >= 1.0 - 1e-12:
            break
        out.append(i * math.pi * root / b)
    return out


def grid_bipartitions(s: PointSet, epsilon: float, b: float = 1.0) -> list[BalancedBipartition]:
    return _dedupe(s, angle_grid(epsilon, b))
