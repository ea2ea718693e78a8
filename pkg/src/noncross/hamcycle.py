"""Long non-crossing Hamiltonian cycles.

An alternating path through the interior points is closed through one or
two hull vertices, then the other hull vertices are spliced in one at a
time.  A hull vertex always lies outside the hull of the polygon built so
far, so it always sees some polygon edge.
"""
from __future__ import annotations

import math
import time

import numpy as np

from . import kernels
from ._parallel import pmap
from .altpath import insert_into_path, insert_into_polygon, two_endpoint_path
from .bipartition import BalancedBipartition, enumerate_balanced_bipartitions, grid_bipartitions
from .errors import NoValidClosure, NoVisibleEdge
from .geometry import PointSet, Structure, convex_hull, longest
from .report import RunReport, new_report


def _crosses(s, a, b, eu, ev) -> bool:
    if len(eu) == 0:
        return False
    return bool(kernels.segment_crossings(s.xs, s.ys, a, b, eu, ev).any())


def _path_edges(path):
    p = np.asarray(path, dtype=np.intp)
    return p[:-1].copy(), p[1:].copy()


def _chain(hull, frm, to, step):
    """Hull vertices from ``frm`` to ``to`` inclusive, walking by ``step``."""
    h = len(hull)
    pos = {v: i for i, v in enumerate(hull)}
    i, out = pos[frm], [frm]
    while hull[i] != to:
        i = (i + step) % h
        out.append(hull[i])
    return out


def close_path_to_cycle(path, s: PointSet, hull=None) -> Structure:
    """Close a path through one or two hull vertices, keeping the longest valid cycle.

    ``path`` is a vertex sequence (or anything with ``.sequence``/``.order``)
    that avoids the hull vertices.  Candidates are ``v + path`` for a single
    hull vertex and ``vx + path + vy`` for an ordered pair.  When none of
    them is crossing-free, the path ends are joined through a chain of
    consecutive hull vertices instead.
    """
    if hasattr(path, "sequence"):
        path = path.sequence
    elif hasattr(path, "order") and path.order is not None:
        path = path.order
    path = [int(v) for v in path]
    if hull is None:
        hull = convex_hull(s).hull
    hull = [int(v) for v in hull]
    p0, p1 = path[0], path[-1]
    eu, ev = _path_edges(path)
    plen = math.fsum(s.dist(u, v) for u, v in zip(path[:-1], path[1:]))

    # which hull vertices each end can reach without crossing the path
    ok0 = {v: not _crosses(s, v, p0, eu, ev) for v in hull}
    ok1 = {v: not _crosses(s, p1, v, eu, ev) for v in hull}
    cands = []
    if len(path) > 1:
        for v in hull:
            cands.append((plen + s.dist(v, p0) + s.dist(p1, v), (v,)))
    for vx in hull:
        for vy in hull:
            if vx != vy:
                cands.append((plen + s.dist(vx, p0) + s.dist(p1, vy) + s.dist(vy, vx), (vx, vy)))
    cands.sort(key=lambda c: (-c[0], c[1]))
    for length, vs in cands:
        vx, vy = vs[0], vs[-1]
        if not (ok0[vx] and ok1[vy]):
            continue
        if len(vs) == 2:
            if _crosses(s, vy, vx, eu, ev):
                continue
            if len(path) > 1 and _crosses(s, vx, p0, np.array([p1]), np.array([vy])):
                continue
        cyc = [vx] + path + ([vy] if len(vs) == 2 else [])
        return Structure.cycle(s, cyc, closure=list(vs), closure_kind="direct")

    best = None
    for vx in hull:
        if not ok0[vx]:
            continue
        for vy in hull:
            if vy == vx or not ok1[vy]:
                continue
            if len(path) > 1 and _crosses(s, vx, p0, np.array([p1]), np.array([vy])):
                continue
            for step in (1, -1):
                chain = _chain(hull, vy, vx, step)
                cyc = path + chain
                st = Structure.cycle(s, cyc)
                if kernels.first_crossing(s.xs, s.ys, *st.edge_arrays()) is None:
                    if best is None or st.length > best.length:
                        best = Structure.cycle(s, cyc, closure=chain, closure_kind="hull_chain")
    if best is None:
        raise NoValidClosure("no hull vertex or hull chain closes the path without crossings")
    return best


def _with_q(s: PointSet, seq, q: int) -> list:
    """Ways to add the on-line point: at either end if the new edge is free, or spliced in."""
    eu, ev = _path_edges(seq)
    out = []
    if not _crosses(s, q, seq[0], eu, ev):
        out.append([q] + list(seq))
    if not _crosses(s, seq[-1], q, eu, ev):
        out.append(list(seq) + [q])
    try:
        out.append(list(insert_into_path(list(seq), q, s).order))
    except NoVisibleEdge:
        pass
    return out


def _complete(s: PointSet, closed: Structure, hull) -> Structure:
    """Splice the hull vertices missing from ``closed`` in CCW order."""
    present = set(closed.order)
    last = closed.info["closure"][-1]
    h = len(hull)
    start = hull.index(last)
    cyc = closed
    for k in range(1, h + 1):
        v = hull[(start + k) % h]
        if v in present:
            continue
        nxt = insert_into_polygon(cyc, v, s)
        if not nxt.length > cyc.length:
            raise AssertionError("polygon insertion must lengthen the cycle")
        cyc = nxt
        present.add(v)
    return cyc


def _map_bipartition(bp: BalancedBipartition, idx) -> BalancedBipartition:
    return BalancedBipartition(
        tuple(int(idx[i]) for i in bp.red),
        tuple(int(idx[i]) for i in bp.blue),
        bp.alpha,
        bp.anchor,
        None if bp.on_line_q is None else int(idx[bp.on_line_q]),
    )


def interior_paths(s: PointSet, bp: BalancedBipartition) -> list:
    """Candidate paths over the interior points for one bipartition (global indices)."""
    seq = list(two_endpoint_path(bp, s).sequence)
    if bp.on_line_q is None:
        return [seq]
    return _with_q(s, seq, bp.on_line_q)


def _cycle_for_path(s, seq, hull):
    try:
        closed = close_path_to_cycle(seq, s, hull)
    except NoValidClosure:
        return None
    full = _complete(s, closed, hull)
    return Structure.cycle(s, full.order, closed_length=closed.length,
                           closure_kind=closed.info["closure_kind"])


def _cycle_for_bipartition(s, bp, hull):
    return longest([_cycle_for_path(s, seq, hull) for seq in interior_paths(s, bp)])


def _run(name, s: PointSet, directions, threads: int, q_opt, extra):
    if s.n < 3:
        raise ValueError("a cycle needs at least three points")
    t0 = time.perf_counter()
    hull = list(convex_hull(s).hull)
    on_hull = set(hull)
    interior = np.array([i for i in range(s.n) if i not in on_hull], dtype=np.intp)
    m = len(interior)
    count = 0
    if m == 0:
        best = Structure.cycle(s, hull, closed_length=None, closure_kind="hull")
    elif m <= 2:
        best = _cycle_for_path(s, interior.tolist(), hull)
    else:
        sub = s.subset(interior)
        if directions is None:
            bps = enumerate_balanced_bipartitions(sub)
        else:
            bps = grid_bipartitions(sub, *directions)
        bps = [_map_bipartition(bp, interior) for bp in bps]
        count = len(bps)
        cycles = pmap(lambda bp: _cycle_for_bipartition(s, bp, hull), bps, threads)
        best = longest(cycles)
    if best is None:
        raise NoValidClosure("no bipartition gave a closable interior path")
    rep = new_report(name, s)
    rep.kind = "CYCLE"
    rep.length = best.length
    rep.extra.update(extra)
    rep.extra.update(interior=m, bipartitions=count, closure_kind=best.info.get("closure_kind"))
    if best.info.get("closed_length") is not None:
        rep.components["closed_path"] = best.info["closed_length"]
        rep.audit("insertions_lengthen", best.length, best.info["closed_length"], tol=0.0)
    if q_opt is not None:
        cycle_oracle_audits(rep, q_opt)
    rep.wall_time = time.perf_counter() - t0
    return best, rep


def cycle_oracle_audits(rep: RunReport, q_opt: float) -> None:
    rep.oracles["longest_cycle"] = q_opt
    rep.ratio("vs_longest_cycle", "longest_cycle", q_opt)
    rep.audit("cycle_projection", rep.length,
              2.0 / math.pi * q_opt - (2 * rep.h - 1) * rep.perimeter / math.pi)


def a4(s: PointSet, threads: int = 1, q_opt: float | None = None):
    return _run("a4", s, None, threads, q_opt, {})


def a4_grid(s: PointSet, epsilon: float, b: float = 1.0, threads: int = 1, q_opt: float | None = None):
    if not 0 < epsilon <= 1:
        raise ValueError("epsilon must lie in (0, 1]")
    return _run("a4-grid", s, (epsilon, b), threads, q_opt, {"epsilon": epsilon, "b": b})

