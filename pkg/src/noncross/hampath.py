"""Long non-crossing Hamiltonian paths.

``a1`` returns the longer of two paths: one aimed at beating the hull
perimeter, and the longest alternating path over all balanced
bipartitions.  Against the longest (possibly crossing) path this gives the
ratio ``2/(pi+1)``.
"""
from __future__ import annotations

import math
import time

import numpy as np

from . import kernels
from ._parallel import pmap
from .altpath import top_bridge_path, insert_into_path
from .bipartition import BalancedBipartition, enumerate_balanced_bipartitions, grid_bipartitions
from .geometry import PointSet, Structure, convex_hull, longest, width
from .report import RunReport, new_report

PATH_RATIO = 2.0 / (math.pi + 1.0)
CASE_SPLIT = (math.pi + 1.0) / 2.0
PERIMETER_TOL = 1e-9
PERIMETER_MIN_N = 31


def bipartition_path(s: PointSet, bp: BalancedBipartition) -> Structure:
    """Alternating path for one bipartition; the on-line point is spliced in."""
    a = top_bridge_path(bp, s)
    if bp.on_line_q is None:
        st = a.to_structure(s)
    else:
        st = insert_into_path(a, bp.on_line_q, s)
    return Structure.path(s, st.order, alpha=bp.alpha)


def best_bipartition_path(s: PointSet, bipartitions=None, threads: int = 1) -> Structure:
    if bipartitions is None:
        bipartitions = enumerate_balanced_bipartitions(s)
    paths = pmap(lambda bp: bipartition_path(s, bp), bipartitions, threads)
    best = longest(paths)
    return Structure.path(s, best.order, alpha=best.info["alpha"], bipartitions=len(paths))


def _cycle_to_path(s, order):
    m = len(order)
    nxt = np.roll(np.asarray(order), -1)
    dx = s.xs[order] - s.xs[nxt]
    dy = s.ys[order] - s.ys[nxt]
    k = int(np.argmin(dx * dx + dy * dy))
    return order[k + 1:] + order[: k + 1] if k + 1 < m else list(order)


def hull_insertion_path(s: PointSet):
    """Hull polygon grown by splicing in interior points, minus its shortest edge.

    Interior points are inserted into an edge they see; points that see no
    edge yet are retried after the others.  ``None`` if some point never
    finds one.
    """
    hull = list(convex_hull(s).hull)
    if s.n == 2:
        return Structure.path(s, hull)
    on_hull = set(hull)
    order = hull
    pending = [i for i in range(s.n) if i not in on_hull]
    while pending:
        rest = []
        for q in pending:
            k = kernels.first_visible_edge(s.xs, s.ys, np.asarray(order, dtype=np.intp), True, q)
            if k < 0:
                rest.append(q)
            else:
                order.insert(k + 1, q)
        if len(rest) == len(pending):
            return None
        pending = rest
    return Structure.path(s, _cycle_to_path(s, order))


def zigzag_path(s: PointSet):
    """Angular zigzag around the centroid with a greedy crossing repair.

    Points sorted by angle are visited 0, k, 1, k+1, ... with
    ``k = ceil(n/2)``; whenever the next edge would cross the path so far,
    the next unused point in that order is tried instead, and if no point
    fits at the tail the path grows from its head.
    """
    n = s.n
    cx, cy = float(s.xs.mean()), float(s.ys.mean())
    srt = np.argsort(np.arctan2(s.ys - cy, s.xs - cx), kind="stable").tolist()
    k = (n + 1) // 2
    zig = []
    for i in range(k):
        zig.append(srt[i])
        if i + k < n:
            zig.append(srt[i + k])
    path = [zig[0]]
    remaining = zig[1:]
    eu, ev = [], []
    while remaining:
        placed = False
        # extend the tail first, the head only when the tail is boxed in
        for end in (-1, 0):
            tip = path[end]
            for pos, c in enumerate(remaining):
                hit = kernels.segment_crossings(s.xs, s.ys, tip, c, np.asarray(eu, dtype=np.intp),
                                                np.asarray(ev, dtype=np.intp))
                if not hit.any():
                    placed = True
                    break
            if placed:
                break
        if not placed:
            return None
        remaining.pop(pos)
        eu.append(tip)
        ev.append(c)
        if end == -1:
            path.append(c)
        else:
            path.insert(0, c)
    return Structure.path(s, path)


def perimeter_path(s: PointSet, h2: Structure | None = None) -> Structure:
    """Longest of several non-crossing path heuristics.

    ``meets_perimeter`` in ``info`` tells whether the result reaches the hull
    perimeter (``None`` for two points, whose hull is degenerate).
    """
    if h2 is None:
        h2 = best_bipartition_path(s)
    per = convex_hull(s).perimeter
    cands = {
        "hull_insertion": hull_insertion_path(s),
        "zigzag": zigzag_path(s),
        "bipartition": h2,
    }
    best = longest(cands.values())
    winner = next(k for k, v in cands.items() if v is best)
    meets = None if s.n == 2 else bool(best.length >= per - PERIMETER_TOL)
    return Structure.path(
        s,
        best.order,
        meets_perimeter=meets,
        winner=winner,
        candidates={k: (None if v is None else v.length) for k, v in cands.items()},
    )


def projection_bound(s: PointSet, alpha: float, order) -> float:
    """Projected length of a path ``order`` onto direction ``alpha``, minus the width there.

    Any alternating path for the bipartition at ``alpha`` is at least this long.
    """
    o = np.asarray(order, dtype=np.intp)
    dx = np.diff(s.xs[o])
    dy = np.diff(s.ys[o])
    proj = np.abs(dx * math.cos(alpha) + dy * math.sin(alpha))
    return math.fsum(proj.tolist()) - width(s, alpha)


def _run(name, s, bipartitions, threads, h_opt, extra):
    t0 = time.perf_counter()
    h2 = best_bipartition_path(s, bipartitions, threads)
    h1 = perimeter_path(s, h2=h2)
    best = longest([h1, h2])
    out = Structure.path(s, best.order, **h1.info)
    rep = new_report(name, s)
    rep.kind = "PATH"
    rep.length = out.length
    rep.components = {"H1": h1.length, "H2": h2.length}
    rep.extra.update(extra)
    rep.extra["meets_perimeter"] = h1.info["meets_perimeter"]
    rep.extra["h1_winner"] = h1.info["winner"]
    rep.extra["bipartitions"] = h2.info["bipartitions"]
    rep.audit("output_at_least_both_paths", out.length, max(h1.length, h2.length), tol=0.0)
    if s.n >= 3:
        rep.audit("perimeter_path_vs_perimeter", h1.length, rep.perimeter,
                  tol=PERIMETER_TOL, hard=s.n >= PERIMETER_MIN_N)
    if h_opt is not None:
        path_oracle_audits(rep, s, h2, h_opt)
    rep.wall_time = time.perf_counter() - t0
    return out, rep


def path_oracle_audits(rep: RunReport, s: PointSet, h2: Structure, h_opt: float) -> None:
    rep.oracles["longest_path"] = h_opt
    rep.ratio("vs_longest_path", "longest_path", h_opt)
    rep.audit("path_ratio", rep.length, PATH_RATIO * h_opt, hard=False)
    per = rep.perimeter
    rep.extra["optimum_case"] = "short" if h_opt <= CASE_SPLIT * per else "long"
    if s.n % 2 == 0:
        rep.audit("bipartition_path_projection", h2.length, 2.0 / math.pi * h_opt - per / math.pi)


def a1(s: PointSet, threads: int = 1, h_opt: float | None = None):
    return _run("a1", s, None, threads, h_opt, {})


def a1_grid(s: PointSet, epsilon: float, b: float = 1.0, threads: int = 1, h_opt: float | None = None):
    if not 0 < epsilon <= 1:
        raise ValueError("epsilon must lie in (0, 1]")
    bps = grid_bipartitions(s, epsilon, b)
    return _run("a1-grid", s, bps, threads, h_opt, {"epsilon": epsilon, "b": b})
