import itertools
import math

import numpy as np
import pytest

from noncross import PointSet
from noncross.errors import OracleCapExceeded
from noncross.geometry import check_structure, validate_noncrossing
from noncross.oracle import (
    brute_longest_cycle,
    brute_longest_noncrossing_tree,
    brute_longest_path,
    brute_longest_tree,
    dmax_profile,
    kruskal_max_tree,
    max_spanning_tree,
    oracle_caps,
)

from .conftest import random_set


def test_max_spanning_tree_examples(square):
    assert max_spanning_tree(square).length == pytest.approx(1 + 2 * math.sqrt(2))
    t = PointSet([(0, 0), (3, 0), (1, 1)])
    st = max_spanning_tree(t)
    assert st.edges == ((0, 1), (1, 2))
    assert st.length == pytest.approx(3 + math.sqrt(5))


def test_brute_examples(square):
    assert brute_longest_path(square).length == pytest.approx(1 + 2 * math.sqrt(2))
    assert brute_longest_path(square, True).length == pytest.approx(2 + math.sqrt(2))
    assert brute_longest_cycle(square).length == pytest.approx(2 + 2 * math.sqrt(2))
    assert brute_longest_cycle(square, True).length == pytest.approx(4.0)
    assert brute_longest_noncrossing_tree(square).length == pytest.approx(2 + math.sqrt(2))
    two = PointSet([(0, 0), (1, 1)])
    assert brute_longest_path(two).m == 1 and brute_longest_path(two, True).m == 1
    tri = PointSet([(0, 0), (1, 0), (0.2, 0.9)])
    assert brute_longest_cycle(tri).length == pytest.approx(brute_longest_cycle(tri, True).length)
    assert brute_longest_noncrossing_tree(tri).length == pytest.approx(max_spanning_tree(tri).length)


def test_brute_path_matches_permutations(rng):
    for _ in range(10):
        s = random_set(rng, 6)
        best = max(
            sum(s.dist(p[i], p[i + 1]) for i in range(5)) for p in itertools.permutations(range(6))
        )
        got = brute_longest_path(s)
        check_structure(s, got)
        assert got.length == pytest.approx(best, rel=1e-12)


def test_noncrossing_results_are_noncrossing(rng):
    for _ in range(10):
        s = random_set(rng, int(rng.integers(4, 8)))
        for st in (brute_longest_path(s, True), brute_longest_cycle(s, True), brute_longest_noncrossing_tree(s)):
            check_structure(s, st)
            validate_noncrossing(s, st)


def test_prim_matches_kruskal_and_pruefer(rng):
    for _ in range(40):
        s = random_set(rng, int(rng.integers(2, 8)))
        m = max_spanning_tree(s)
        check_structure(s, m)
        assert m.length == pytest.approx(kruskal_max_tree(s).length, rel=1e-12)
        assert m.length == pytest.approx(brute_longest_tree(s, noncrossing=False).length, rel=1e-12)
    big = random_set(rng, 200)
    assert max_spanning_tree(big).length == pytest.approx(kruskal_max_tree(big).length, rel=1e-12)


def test_caps_and_env_override(monkeypatch, rng):
    s = random_set(rng, 11)
    with pytest.raises(OracleCapExceeded):
        brute_longest_path(s)
    with pytest.raises(OracleCapExceeded):
        brute_longest_cycle(s)
    with pytest.raises(OracleCapExceeded):
        brute_longest_noncrossing_tree(random_set(rng, 10))
    monkeypatch.setenv("NONCROSS_ORACLE_CAP", "4")
    assert oracle_caps()["path"] == 4 and oracle_caps()["mst"] == 20000
    with pytest.raises(OracleCapExceeded):
        brute_longest_path(random_set(rng, 5))
    monkeypatch.setenv("NONCROSS_ORACLE_CAP", "path=11,tree=3")
    caps = oracle_caps()
    assert caps["path"] == 11 and caps["tree"] == 3 and caps["cycle"] == 10
    monkeypatch.setenv("NONCROSS_ORACLE_CAP", "bogus=3")
    with pytest.raises(ValueError):
        oracle_caps()


def test_dmax_profile(square, rng):
    d, bound = dmax_profile(square)
    np.testing.assert_allclose(d, math.sqrt(2))
    assert bound == pytest.approx(3 * math.sqrt(2))
    _, b2 = dmax_profile(PointSet([(0, 0), (1, 0)]))
    assert b2 == pytest.approx(1.0)
    for _ in range(10):
        s = random_set(rng, 100)
        d, bound = dmax_profile(s)
        np.testing.assert_allclose(d, s.distance_matrix().max(axis=1))
        assert bound >= max_spanning_tree(s).length - 1e-9


def test_brute_force_is_deterministic(rng):
    s = random_set(rng, 7)
    assert brute_longest_path(s).order == brute_longest_path(s).order
    assert brute_longest_cycle(s, True).order == brute_longest_cycle(s, True).order
