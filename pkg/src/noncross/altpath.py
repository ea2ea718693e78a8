"""Alternating red/blue paths across a separating line, and point insertion.

Both path builders peel bridges off the hull of the not-yet-used points: a
bridge is a hull edge with one red and one blue end.  Appending a bridge end
keeps the growing path outside the hull of what remains, which is why the
result never self-crosses.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .bipartition import BalancedBipartition
from .errors import CrossingError, NotExterior, NoVisibleEdge, StructureError, UnbalancedError
from .geometry import PointSet, Structure, edges_length, find_crossing


@dataclass(frozen=True)
class AlternatingPath:
    sequence: tuple
    bipartition: BalancedBipartition
    length: float
    construction: str = "single_chain"

    def to_structure(self, s: PointSet) -> Structure:
        return Structure.path(s, self.sequence)


def _colored(bp: BalancedBipartition):
    reds = np.array(bp.red, dtype=np.intp)
    blues = np.array(bp.blue, dtype=np.intp)
    if len(reds) == 0 or len(blues) == 0:
        raise UnbalancedError("both colour classes must be non-empty")
    return reds, blues


def bridges(bp: BalancedBipartition, s: PointSet):
    """``(top, bottom)`` bridges as ``(red, blue)`` index pairs.

    Top and bottom refer to the frame in which red lies left of the
    separating line; with a single red and blue point both are that edge.
    """
    reds, blues = _colored(bp)
    top = kernels.bridge(s.xs, s.ys, reds, blues, 1)
    bottom = kernels.bridge(s.xs, s.ys, reds, blues, -1)
    return (int(top[0]), int(top[1])), (int(bottom[0]), int(bottom[1]))


def _path_length(s, seq):
    return edges_length(s, list(zip(seq[:-1], seq[1:])))


def top_bridge_path(bp: BalancedBipartition, s: PointSet) -> AlternatingPath:
    reds, blues = _colored(bp)
    if abs(len(reds) - len(blues)) > 1:
        raise UnbalancedError(f"|R|={len(reds)}, |B|={len(blues)}")
    seq = tuple(int(v) for v in kernels.top_bridge_order(s.xs, s.ys, reds, blues))
    return AlternatingPath(seq, bp, _path_length(s, seq), "single_chain")


SEARCH_BUDGET = 200_000


def _noncrossing(s, seq) -> bool:
    if len(seq) < 4:
        return True
    o = np.asarray(seq, dtype=np.intp)
    return kernels.first_crossing(s.xs, s.ys, o[:-1].copy(), o[1:].copy()) is None


def _pick(s, bp, seqs, construction):
    best = None
    for seq in seqs:
        cand = AlternatingPath(tuple(int(v) for v in seq), bp, _path_length(s, seq), construction)
        if best is None or (cand.length, _rev_key(cand.sequence)) > (best.length, _rev_key(best.sequence)):
            best = cand
    return best


def _reserved_orders(s, bp, top, bottom):
    """Single chain from one bridge end with the far bridge end held back for last."""
    (r1, b1), (r2, b2) = top, bottom
    flipped = np.ascontiguousarray(-s.ys)
    out = []
    for ys, start, held in ((s.ys, r1, b2), (s.ys, b1, r2), (flipped, r2, b1), (flipped, b2, r1)):
        reds = np.array([v for v in bp.red if v != held], dtype=np.intp)
        blues = np.array([v for v in bp.blue if v != held], dtype=np.intp)
        seq = [int(v) for v in kernels.top_bridge_order(s.xs, ys, reds, blues)] + [held]
        if seq[0] == start and _noncrossing(s, seq):
            out.append(seq)
    return out


def _search_orders(s, bp, top, bottom, budget=SEARCH_BUDGET):
    """Depth-first search for an alternating crossing-free path between bridge ends."""
    red = set(bp.red)
    (r1, b1), (r2, b2) = top, bottom
    n = len(bp.red) + len(bp.blue)
    for start, end in ((r1, b2), (b1, r2)):
        path, used = [start], {start, end}
        eu, ev = [], []
        nodes = 0

        def ok(a, b):
            if not eu:
                return True
            return not kernels.segment_crossings(s.xs, s.ys, a, b, np.asarray(eu, dtype=np.intp),
                                                 np.asarray(ev, dtype=np.intp)).any()

        def rec():
            nonlocal nodes
            nodes += 1
            if nodes > budget:
                return False
            last = path[-1]
            if len(path) == n - 1:
                return ok(last, end)
            want_red = last not in red
            pool = bp.red if want_red else bp.blue
            for v in pool:
                if v in used or not ok(last, v):
                    continue
                used.add(v)
                path.append(v)
                eu.append(last)
                ev.append(v)
                if rec():
                    return True
                used.discard(v)
                path.pop()
                eu.pop()
                ev.pop()
            return False

        if rec():
            return [path + [end]]
    return []


def two_endpoint_path(bp: BalancedBipartition, s: PointSet) -> AlternatingPath:
    """Path grown from both bridges at once; ends lie on distinct bridges.

    Both admissible starting pairs are grown and the longer crossing-free
    result is kept.  Simultaneous growth can self-cross when both bridges
    share a vertex that one chain takes from under the other; then the path
    is rebuilt as a single chain that saves the far bridge end for last, then
    by a bounded exhaustive search, and only as a last resort as a plain
    single chain whose second end may be off the bridges.
    ``construction`` records which of these produced the result.
    """
    reds, blues = _colored(bp)
    if len(reds) != len(blues):
        raise UnbalancedError(f"|R|={len(reds)} != |B|={len(blues)}")
    grown = [kernels.two_endpoint_order(s.xs, s.ys, reds, blues, v) for v in (0, 1)]
    grown = [g for g in grown if _noncrossing(s, g)]
    if grown:
        return _pick(s, bp, grown, "grow")
    top, bottom = bridges(bp, s)
    seqs = _reserved_orders(s, bp, top, bottom)
    if seqs:
        return _pick(s, bp, seqs, "reserved")
    seqs = _search_orders(s, bp, top, bottom)
    if seqs:
        return _pick(s, bp, seqs, "search")
    return _pick(s, bp, [kernels.top_bridge_order(s.xs, s.ys, reds, blues)], "single_chain")


def _rev_key(seq):
    # larger key wins, so negate for "lexicographically smallest canonical order"
    canon = min(seq, seq[::-1])
    return tuple(-v for v in canon)


def line_crossings(a: AlternatingPath, s: PointSet) -> np.ndarray:
    """Positions along the separating line where consecutive edges cross it."""
    seq = np.asarray(a.sequence, dtype=np.intp)
    u, v = a.bipartition.frame_coords(s, seq)
    u0, u1 = u[:-1], u[1:]
    v0, v1 = v[:-1], v[1:]
    t = u0 / (u0 - u1)
    return v0 + t * (v1 - v0)


def check_alternating(a: AlternatingPath, s: PointSet, monotone: bool = True) -> None:
    """Alternation, crossing-freeness and (optionally) monotone line crossings."""
    bp = a.bipartition
    colors = [bp.color_of(v) for v in a.sequence]
    if -1 in colors:
        raise StructureError("the on-line point cannot be part of an alternating path")
    if any(c0 == c1 for c0, c1 in zip(colors, colors[1:])):
        raise StructureError("consecutive vertices share a colour")
    st = a.to_structure(s)
    pair = find_crossing(s, st)
    if pair is not None:
        raise CrossingError(pair)
    if monotone and len(a.sequence) > 2:
        c = line_crossings(a, s)
        d = np.diff(c)
        if not ((d > 0).all() or (d < 0).all()):
            raise StructureError("edges do not cross the separating line monotonically")


def insert_into_path(a, q: int, s: PointSet) -> Structure:
    """Splice ``q`` into the first path edge it sees.

    ``a`` is an :class:`AlternatingPath` or a vertex sequence.
    """
    seq = tuple(a.sequence) if isinstance(a, AlternatingPath) else tuple(int(v) for v in a)
    if len(seq) == 1:
        return Structure.path(s, seq + (q,))
    k = kernels.first_visible_edge(s.xs, s.ys, np.asarray(seq, dtype=np.intp), False, int(q))
    if k < 0:
        raise NoVisibleEdge(f"point {q} sees no edge of the path")
    return Structure.path(s, seq[: k + 1] + (q,) + seq[k + 1:])


def outside_hull_of(s: PointSet, verts, q: int) -> bool:
    sub = np.asarray(verts, dtype=np.intp)
    hull = sub[kernels.convex_hull(s.xs[sub].copy(), s.ys[sub].copy())]
    h = len(hull)
    for i in range(h):
        if s.orient(int(hull[i]), int(hull[(i + 1) % h]), q) < 0:
            return True
    return False


def visible_edge(poly: Structure, q: int, s: PointSet) -> int:
    """Smallest index of a polygon edge that ``q`` sees (q outside the hull)."""
    order = poly.order
    if order is None or len(order) < 3:
        raise StructureError("visible_edge needs a polygon with at least three vertices")
    if not outside_hull_of(s, order, q):
        raise NotExterior(f"point {q} is not outside the polygon's hull")
    k = kernels.first_visible_edge(s.xs, s.ys, np.asarray(order, dtype=np.intp), True, int(q))
    if k < 0:
        raise NoVisibleEdge(f"point {q} sees no polygon edge")
    return int(k)


def insert_into_polygon(poly: Structure, q: int, s: PointSet) -> Structure:
    k = visible_edge(poly, q, s)
    order = poly.order
    return Structure.cycle(s, order[: k + 1] + (q,) + order[k + 1:])
