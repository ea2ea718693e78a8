"""Exact reference values.

The maximum spanning tree (crossings allowed) is exact at any size.  The
longest path, cycle and non-crossing tree come from exhaustive search and
are capped; ``NONCROSS_ORACLE_CAP`` raises or lowers the caps, either as one
integer for all three or as ``path=11,tree=8``.  The ``mst`` cap only bounds
what the CLI computes automatically for tree reports (O(n^2) time).
"""
from __future__ import annotations

import math
import os

import numpy as np

from . import kernels
from .errors import OracleCapExceeded
from .geometry import PointSet, Structure, StructureKind, convex_hull, diameter

DEFAULT_CAPS = {"path": 10, "cycle": 10, "tree": 9, "mst": 20000}
BRUTE_KEYS = ("path", "cycle", "tree")


def oracle_caps() -> dict:
    caps = dict(DEFAULT_CAPS)
    raw = os.environ.get("NONCROSS_ORACLE_CAP", "").strip()
    if not raw:
        return caps
    if "=" not in raw:
        caps.update({k: int(raw) for k in BRUTE_KEYS})
        return caps
    for item in raw.split(","):
        key, _, val = item.partition("=")
        key = key.strip()
        if key not in caps:
            raise ValueError(f"unknown oracle cap {key!r}")
        caps[key] = int(val)
    return caps


def _check_cap(s: PointSet, what: str, key: str) -> None:
    cap = oracle_caps()[key]
    if s.n > cap:
        raise OracleCapExceeded(s.n, cap, what)


def within_cap(s: PointSet, key: str) -> bool:
    return s.n <= oracle_caps()[key]


def max_spanning_tree(s: PointSet) -> Structure:
    """Longest spanning tree of the complete Euclidean graph, crossings allowed."""
    if s.n < 2:
        raise ValueError("need at least two points")
    parent = kernels.prim_max_tree(s.xs, s.ys)
    edges = sorted((min(v, int(p)), max(v, int(p))) for v, p in enumerate(parent) if p >= 0)
    return Structure.from_edges(s, edges, StructureKind.TREE)


def kruskal_max_tree(s: PointSet) -> Structure:
    """Greedy on descending edge length with union-find; O(n^2 log n), for cross-checks."""
    n = s.n
    iu, ju = np.triu_indices(n, 1)
    d = s.distance_matrix()[iu, ju]
    order = np.lexsort((ju, iu, -d))
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    edges = []
    for k in order:
        a, b = find(int(iu[k])), find(int(ju[k]))
        if a != b:
            parent[a] = b
            edges.append((int(iu[k]), int(ju[k])))
            if len(edges) == n - 1:
                break
    return Structure.from_edges(s, sorted(edges), StructureKind.TREE)


def brute_longest_path(s: PointSet, noncrossing: bool = False) -> Structure:
    _check_cap(s, "brute_longest_path", "path")
    if s.n < 2:
        raise ValueError("need at least two points")
    _, order = kernels.brute_path(s.xs, s.ys, s.distance_matrix(), bool(noncrossing))
    return Structure.path(s, order.tolist(), noncrossing=bool(noncrossing))


def brute_longest_cycle(s: PointSet, noncrossing: bool = False) -> Structure:
    _check_cap(s, "brute_longest_cycle", "cycle")
    if s.n < 3:
        raise ValueError("a cycle needs at least three points")
    _, order = kernels.brute_cycle(s.xs, s.ys, s.distance_matrix(), bool(noncrossing))
    return Structure.cycle(s, order.tolist(), noncrossing=bool(noncrossing))


def brute_longest_tree(s: PointSet, noncrossing: bool = True) -> Structure:
    """Best labeled tree over every Pruefer sequence, optionally crossing-free."""
    _check_cap(s, "brute_longest_tree", "tree")
    if s.n < 2:
        raise ValueError("need at least two points")
    _, edges = kernels.brute_tree(s.xs, s.ys, s.distance_matrix(), bool(noncrossing))
    edges = sorted((min(int(u), int(v)), max(int(u), int(v))) for u, v in edges)
    return Structure.from_edges(s, edges, StructureKind.TREE, noncrossing=bool(noncrossing))


def brute_longest_noncrossing_tree(s: PointSet) -> Structure:
    return brute_longest_tree(s, noncrossing=True)


def dmax_profile(s: PointSet, chunk: int = 4096):
    """Farthest-point distance of every point, and ``sum(d_max) - D``.

    The sum bounds the maximum spanning tree from above.  The farthest
    point always lies on the hull, so only hull vertices are scanned.
    """
    if s.n < 2:
        raise ValueError("need at least two points")
    hull = np.asarray(convex_hull(s).hull, dtype=np.intp)
    hx, hy = s.xs[hull], s.ys[hull]
    out = np.empty(s.n)
    for i in range(0, s.n, chunk):
        dx = s.xs[i:i + chunk, None] - hx[None, :]
        dy = s.ys[i:i + chunk, None] - hy[None, :]
        out[i:i + chunk] = np.sqrt(dx * dx + dy * dy).max(axis=1)
    _, d = diameter(s)
    return out, math.fsum(out.tolist()) - d
