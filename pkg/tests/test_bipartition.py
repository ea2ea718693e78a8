import itertools
import math

import numpy as np
import pytest
from scipy.optimize import linprog

from noncross import PointSet, enumerate_balanced_bipartitions
from noncross.bipartition import angle_grid, bisect_by_direction, bisect_with_retry, canonical_coloring, grid_bipartitions
from noncross.errors import ProjectionTie

from .conftest import random_set


def _separable(xy, red, blue, through=None):
    """Strict linear separability by LP; optionally by a line through ``through``."""
    # variables w1, w2, c: w.r - c <= -1 for red, w.b - c >= 1 for blue
    rows, rhs = [], []
    for i in red:
        rows.append([xy[i][0], xy[i][1], -1.0])
        rhs.append(-1.0)
    for i in blue:
        rows.append([-xy[i][0], -xy[i][1], 1.0])
        rhs.append(-1.0)
    eq = None
    if through is not None:
        eq = ([[xy[through][0], xy[through][1], -1.0]], [0.0])
    res = linprog(
        np.zeros(3), A_ub=np.array(rows), b_ub=np.array(rhs),
        A_eq=None if eq is None else np.array(eq[0]), b_eq=None if eq is None else np.array(eq[1]),
        bounds=[(None, None)] * 3, method="highs",
    )
    return res.status == 0


def _brute_signatures(s):
    xy = s.xy.tolist()
    n = s.n
    out = set()
    qs = [None] if n % 2 == 0 else list(range(n))
    for q in qs:
        rest = [i for i in range(n) if i != q]
        k = len(rest) // 2
        for red in itertools.combinations(rest, k):
            blue = tuple(i for i in rest if i not in red)
            if red > blue:
                continue
            if _separable(xy, red, blue, q):
                out.add((-1 if q is None else q, min(red, blue)))
    return out


def _check_separated(s, bp):
    u, _ = bp.frame_coords(s)
    assert (u[list(bp.red)] < 0).all() and (u[list(bp.blue)] > 0).all()
    if bp.on_line_q is not None:
        assert abs(u[bp.on_line_q]) < 1e-12
    assert abs(len(bp.red) - len(bp.blue)) <= 1
    cover = set(bp.red) | set(bp.blue) | ({bp.on_line_q} - {None})
    assert cover == set(range(s.n))


def test_bisect_examples(square):
    bp = bisect_by_direction(square, 0.0)
    assert bp.red == (0, 3) and bp.blue == (1, 2)
    bp = bisect_by_direction(square, math.pi / 2)
    assert bp.red == (0, 1) and bp.blue == (2, 3)
    s = PointSet([(0, 0), (2, 1), (4, 0)])
    bp = bisect_by_direction(s, 0.0)
    assert bp.on_line_q == 1 and bp.red == (0,) and bp.blue == (2,)


def test_projection_tie_and_retry(square):
    with pytest.raises(ProjectionTie):
        bisect_by_direction(square, math.pi / 4)
    bp = bisect_with_retry(square, math.pi / 4)
    _check_separated(square, bp)


def test_enumeration_examples(square):
    assert len(enumerate_balanced_bipartitions(square)) == 2
    assert len(enumerate_balanced_bipartitions(PointSet([(0, 0), (3, 0), (1, 1)]))) == 3
    assert len(enumerate_balanced_bipartitions(PointSet([(0, 0), (1, 0.5)]))) == 1


def test_enumeration_matches_brute_force(rng):
    for trial in range(40):
        n = int(rng.integers(2, 10))
        s = random_set(rng, n)
        got = enumerate_balanced_bipartitions(s)
        sigs = [bp.signature for bp in got]
        assert sigs == sorted(sigs) and len(set(sigs)) == len(sigs)
        assert set(sigs) == _brute_signatures(s), f"trial {trial}, n={n}"
        for bp in got:
            _check_separated(s, bp)


def test_enumeration_count_is_at_most_n_squared(rng):
    for _ in range(20):
        s = random_set(rng, int(rng.integers(2, 120)))
        assert len(enumerate_balanced_bipartitions(s)) <= s.n ** 2


def test_canonical_coloring_puts_red_on_smaller_side(rng):
    s = random_set(rng, 11)
    for bp in enumerate_balanced_bipartitions(s):
        assert tuple(sorted(bp.red)) <= tuple(sorted(bp.blue))
        _check_separated(s, bp)
        flipped = canonical_coloring(type(bp)(bp.blue, bp.red, bp.alpha + math.pi, bp.anchor, bp.on_line_q))
        assert flipped.red == bp.red


def test_angle_grid_examples():
    assert angle_grid(1.0) == [0.0]
    assert angle_grid(0.25) == pytest.approx([0.0, math.pi / 2])
    g = angle_grid(0.01)
    assert len(g) == 10 and g == pytest.approx([i * math.pi / 10 for i in range(10)])
    with pytest.raises(ValueError):
        angle_grid(0.0)


def test_grid_bipartitions_are_a_subset(rng):
    s = random_set(rng, 15)
    full = {bp.signature for bp in enumerate_balanced_bipartitions(s)}
    grid = {bp.signature for bp in grid_bipartitions(s, 0.05)}
    assert grid <= full
