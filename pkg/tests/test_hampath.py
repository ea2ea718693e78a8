import math

import numpy as np
import pytest

from noncross import PointSet, a1, convex_hull, a1_grid, best_bipartition_path, enumerate_balanced_bipartitions, perimeter_path
from noncross.geometry import check_structure, validate_noncrossing
from noncross.hampath import PATH_RATIO, bipartition_path, hull_insertion_path, projection_bound, zigzag_path
from noncross.oracle import brute_longest_path

from .conftest import random_set

SQ = 2 + math.sqrt(2)


def _circle(n=16):
    t = 2 * np.pi * np.arange(n) / n
    return PointSet(np.c_[np.cos(t), np.sin(t)])


def test_perimeter_path_examples(square):
    p = perimeter_path(square)
    assert p.length == pytest.approx(SQ)
    assert p.info["meets_perimeter"] is False
    c = _circle()
    pc = perimeter_path(c)
    assert pc.info["meets_perimeter"] is True
    z = zigzag_path(c)
    assert z is not None and z.length > 2 * math.pi * 0.99
    two = PointSet([(0, 0), (1, 0.5)])
    p2 = perimeter_path(two)
    assert p2.order in ((0, 1), (1, 0)) and p2.info["meets_perimeter"] is None


def test_portfolio_candidates_are_valid(rng):
    for _ in range(60):
        s = random_set(rng, int(rng.integers(3, 40)))
        for fn in (hull_insertion_path, zigzag_path):
            st = fn(s)
            if st is not None:
                validate_noncrossing(s, st)
                check_structure(s, st)


def test_best_bipartition_path_examples(square):
    b = best_bipartition_path(square)
    assert b.length == pytest.approx(SQ)
    two = PointSet([(0, 0), (1, 0.5)])
    assert best_bipartition_path(two).m == 1


def test_a1_square_and_report(square):
    st, rep = a1(square)
    assert st.length == pytest.approx(SQ)
    assert rep.components["H1"] == pytest.approx(SQ) and rep.components["H2"] == pytest.approx(SQ)
    assert rep.perimeter == pytest.approx(4.0)
    assert not rep.hard_violations


def test_a1_grid_variants(square, rng):
    st, _ = a1_grid(square, 0.01)
    assert st.length == pytest.approx(a1(square)[0].length)
    for _ in range(30):
        s = random_set(rng, int(rng.integers(2, 25)))
        full, _ = a1(s)
        for eps in (1.0, 0.1):
            g, _ = a1_grid(s, eps)
            check_structure(s, g)
            validate_noncrossing(s, g)
            assert g.length <= full.length + 1e-12
    with pytest.raises(ValueError):
        a1_grid(square, 0.0)


def test_a1_output_valid_and_dominates_components(rng):
    for _ in range(80):
        s = random_set(rng, int(rng.integers(2, 30)))
        st, rep = a1(s)
        check_structure(s, st)
        validate_noncrossing(s, st)
        assert st.length >= max(rep.components.values())


def test_odd_paths_span_everything(rng):
    for _ in range(20):
        s = random_set(rng, 5)
        for bp in enumerate_balanced_bipartitions(s):
            st = bipartition_path(s, bp)
            assert sorted(st.order) == list(range(5))
            validate_noncrossing(s, st)


def test_projection_bound_per_bipartition(rng):
    for _ in range(25):
        n = 2 * int(rng.integers(2, 6))
        s = random_set(rng, n)
        opt = brute_longest_path(s).order
        for bp in enumerate_balanced_bipartitions(s):
            st = bipartition_path(s, bp)
            assert st.length >= projection_bound(s, bp.alpha, opt) - 1e-9


def test_circle_path_beats_projection_bound():
    c = _circle()
    st, _ = a1(c)
    sub = PointSet(c.xy[::2])
    opt = brute_longest_path(sub).length
    sub_st, _ = a1(sub)
    per = convex_hull(sub).perimeter
    assert sub_st.length >= 2 / math.pi * opt - per / math.pi - 1e-9
    assert st.length >= sub_st.length


def test_path_ratio_constant():
    assert PATH_RATIO == pytest.approx(0.4829, abs=1e-4)
