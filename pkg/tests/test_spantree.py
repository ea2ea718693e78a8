import math

import numpy as np
import pytest

from noncross import PointSet, a2, a3, diameter, star
from noncross.errors import FrameRequired
from noncross.geometry import check_structure, validate_noncrossing
from noncross.oracle import max_spanning_tree
from noncross.spantree import STRIPS, Frame, Side, extended_star

from .conftest import random_set

SQ = 2 + math.sqrt(2)


def _frame(s):
    (i, j), _ = diameter(s)
    f = Frame.from_pair(s, i, j)
    _, Y = f.coords(s)
    if Y[int(np.argmax(np.abs(Y)))] < 0:
        f = f.with_reflect(True)
    return f


def test_strip_constants():
    assert STRIPS.lines == pytest.approx((0.0, 0.2, 0.8, 1.0))
    assert STRIPS.y_c == pytest.approx(0.6) and STRIPS.y_c == pytest.approx(STRIPS.t)


def test_frame_round_trip_and_lens(rng):
    for _ in range(30):
        s = random_set(rng, int(rng.integers(2, 50)))
        f = _frame(s)
        X, Y = f.coords(s)
        assert X[f.a] == pytest.approx(0, abs=1e-12) and X[f.b] == pytest.approx(1)
        x, y = f.invert(X, Y)
        np.testing.assert_allclose(x, s.xs, atol=1e-12)
        np.testing.assert_allclose(y, s.ys, atol=1e-12)
        f.check_lens(s)
    s = PointSet([(0, 0), (1, 0), (5, 5)])
    with pytest.raises(FrameRequired):
        Frame.from_pair(s, 0, 1).check_lens(s)


def test_star_examples(square):
    assert star(square, 0).length == pytest.approx(SQ)
    assert star(PointSet([(0, 0), (1, 2)]), 1).m == 1
    t = 2 * np.pi * np.arange(16) / 16
    c = PointSet(np.c_[np.cos(t), np.sin(t)])
    want = sum(2 * math.sin(k * math.pi / 16) for k in range(1, 16))
    assert star(c, 3).length == pytest.approx(want)


def test_a2_square_and_lower_bounds(square, rng):
    st, rep = a2(square, mst_length=max_spanning_tree(square).length)
    assert st.length == pytest.approx(SQ)
    assert not rep.violations
    for _ in range(100):
        s = random_set(rng, int(rng.integers(2, 120)))
        st, rep = a2(s, mst_length=max_spanning_tree(s).length)
        validate_noncrossing(s, st)
        assert not rep.violations, rep.to_json()


def test_extended_star_square(square):
    f = _frame(square)
    e = extended_star(square, f, Side.A_SIDE)
    assert e.length == pytest.approx(SQ)
    with pytest.raises(FrameRequired):
        extended_star(square, None)


def test_a3_square_all_five_tie(square):
    st, rep = a3(square)
    assert st.length == pytest.approx(SQ)
    for v in rep.components.values():
        assert v == pytest.approx(SQ)


def test_a3_structures_are_noncrossing_trees(rng):
    for _ in range(150):
        s = random_set(rng, int(rng.integers(2, 150)))
        f = _frame(s)
        h = int(np.argmax(np.abs(f.coords(s)[1])))
        for st in (star(s, f.a), star(s, f.b), star(s, h),
                   extended_star(s, f, Side.A_SIDE), extended_star(s, f, Side.B_SIDE)):
            check_structure(s, st)
            validate_noncrossing(s, st)
        out, rep = a3(s)
        assert out.length == max(rep.components.values())


def test_a3_report_fields(rng):
    s = random_set(rng, 60)
    mst = max_spanning_tree(s).length
    _, rep = a3(s, mst_length=mst)
    for key in ("winner", "case", "sum_abs_y", "y_h", "n_a", "n_b", "n_m"):
        assert key in rep.extra
    assert rep.extra["y_h"] >= 0
    assert rep.extra["n_a"] + rep.extra["n_b"] + rep.extra["n_m"] == s.n
    assert rep.ratios[0].oracle == "max_spanning_tree"


def test_extended_star_bound_fails_on_three_points():
    # the extended star can be shorter than its claimed lower bound on tiny
    # inputs; three points far from the axis show it
    s = PointSet([(0, 0), (1, 0), (0.5, 0.01)])
    _, rep = a3(s)
    bad = {a.name for a in rep.violations}
    assert "extended_star_a" in bad and "extended_star_b" in bad


def test_high_star_audit_on_flat_set_with_peak():
    rng = np.random.default_rng(3)
    xy = np.c_[rng.random(60), rng.uniform(-0.003, 0.003, 60)]
    xy[0], xy[1], xy[2] = (0, 0), (1, 0), (0.5, 0.7)
    _, rep = a3(PointSet(xy))
    a = next(x for x in rep.audits if x.name == "high_star")
    assert a.satisfied
