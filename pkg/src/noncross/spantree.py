"""Long non-crossing spanning trees from stars and extended stars.

Everything is analysed in a normalized frame where the diameter pair sits
at (0, 0) and (1, 0); output edges still index the input points and
lengths are reported in input units.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import FrameRequired
from .geometry import PointSet, Structure, StructureKind, convex_hull, diameter, longest
from .predicates import orient_arrays
from .report import AUDIT_TOL, RunReport, new_report


@dataclass(frozen=True)
class StripConstants:
    delta: float = 0.05
    w: float = 0.6
    t: float = 0.6
    z: float = 0.48

    @property
    def lines(self):
        half = self.w / 2
        return (0.0, 0.5 - half, 0.5 + half, 1.0)

    @property
    def y_c(self) -> float:
        return math.sqrt(1.0 - self.lines[2] ** 2)


STRIPS = StripConstants()
TREE_RATIO = 0.502
MIDDLE_Y = 0.15
MIDDLE_DMAX = 0.9605
LENS_TOL = 1e-9


class Side(Enum):
    A_SIDE = "A"
    B_SIDE = "B"


@dataclass(frozen=True)
class Frame:
    """Similarity sending point ``a`` to (0, 0) and ``b`` to (1, 0).

    ``reflect`` additionally flips the sign of y.
    """

    a: int
    b: int
    angle: float
    origin: tuple
    scale: float
    reflect: bool = False

    @classmethod
    def from_pair(cls, s: PointSet, a: int, b: int, reflect: bool = False) -> "Frame":
        dx = s.xs[b] - s.xs[a]
        dy = s.ys[b] - s.ys[a]
        return cls(a, b, math.atan2(dy, dx), (float(s.xs[a]), float(s.ys[a])),
                   1.0 / math.hypot(dx, dy), reflect)

    def with_reflect(self, reflect: bool) -> "Frame":
        return Frame(self.a, self.b, self.angle, self.origin, self.scale, reflect)

    @property
    def sign(self) -> int:
        """Orientation sign of the map (-1 when it mirrors)."""
        return -1 if self.reflect else 1

    def apply(self, xs, ys):
        c, sn = math.cos(self.angle), math.sin(self.angle)
        px = np.asarray(xs) - self.origin[0]
        py = np.asarray(ys) - self.origin[1]
        X = (px * c + py * sn) * self.scale
        Y = (-px * sn + py * c) * self.scale
        return X, (-Y if self.reflect else Y)

    def invert(self, X, Y):
        Y = -np.asarray(Y) if self.reflect else np.asarray(Y)
        X = np.asarray(X)
        c, sn = math.cos(self.angle), math.sin(self.angle)
        px, py = X / self.scale, Y / self.scale
        return px * c - py * sn + self.origin[0], px * sn + py * c + self.origin[1]

    def coords(self, s: PointSet):
        return self.apply(s.xs, s.ys)

    def check_lens(self, s: PointSet, tol: float = LENS_TOL) -> None:
        X, Y = self.coords(s)
        if X.min() < -tol or X.max() > 1 + tol or np.abs(Y).max() > math.sqrt(3) / 2 + tol:
            raise FrameRequired("points leave the unit-diameter lens; is (a, b) a diameter pair?")


def star(s: PointSet, center: int) -> Structure:
    others = np.delete(np.arange(s.n), center)
    edges = np.column_stack([np.full(len(others), center), others])
    return Structure.from_edges(s, edges, StructureKind.STAR, center=int(center))


def _sorted_top_down(s, c, idx, ang, sgn):
    """``idx`` ordered by decreasing angle around ``c``, verified exactly."""
    order = list(idx[np.argsort(-ang, kind="stable")])

    def above(p, r):
        # r strictly above p as seen from c
        return sgn * orient_arrays(s.xs[c], s.ys[c], s.xs[p], s.ys[p], s.xs[r], s.ys[r]) > 0

    if len(order) > 1:
        o = np.array(order)
        bad = ~above(o[1:], o[:-1])
        if bad.any():
            # float angles misordered a near-collinear pair: exact insertion sort
            out = []
            for p in order:
                k = len(out)
                while k > 0 and not above(p, out[k - 1]):
                    k -= 1
                out.insert(k, p)
            order = out
    return np.array(order, dtype=np.intp)


def _assign_wedges(s, c, rays, ray_ang, pts, pt_ang, sgn):
    """Number of rays strictly above each point (its wedge index)."""
    k = len(rays)
    # rays sorted by decreasing angle; count rays with angle > point angle
    wedge = np.searchsorted(-ray_ang, -pt_ang, side="left")
    cx, cy = s.xs[c], s.ys[c]
    for _ in range(k + 1):
        upper_ok = np.ones(len(pts), dtype=bool)
        lower_ok = np.ones(len(pts), dtype=bool)
        has_up = wedge > 0
        if has_up.any():
            r = rays[wedge[has_up] - 1]
            p = pts[has_up]
            upper_ok[has_up] = sgn * orient_arrays(cx, cy, s.xs[p], s.ys[p], s.xs[r], s.ys[r]) > 0
        has_lo = wedge < k
        if has_lo.any():
            r = rays[wedge[has_lo]]
            p = pts[has_lo]
            lower_ok[has_lo] = sgn * orient_arrays(cx, cy, s.xs[p], s.ys[p], s.xs[r], s.ys[r]) < 0
        if upper_ok.all() and lower_ok.all():
            return wedge
        wedge = wedge - (~upper_ok) + (~lower_ok)
    raise AssertionError("wedge assignment did not settle")


def extended_star(s: PointSet, f: Frame, anchor: Side = Side.A_SIDE) -> Structure:
    """Star from the anchor to the far strip, each wedge between its rays
    wired to whichever of the anchor or a bounding far point gives the most
    length."""
    if not isinstance(f, Frame):
        raise FrameRequired("extended_star needs a diameter frame")
    anchor = Side(anchor)
    X, Y = f.coords(s)
    sgn = f.sign
    if anchor is Side.A_SIDE:
        c = f.a
        U = X
    else:
        c = f.b
        U = 1.0 - X
        sgn = -sgn
    far_cut = STRIPS.lines[2]
    allidx = np.arange(s.n)
    is_far = (U >= far_cut) & (allidx != c)
    far = allidx[is_far]
    near = allidx[~is_far & (allidx != c)]
    if len(far) == 0:
        raise FrameRequired("far strip is empty; is the frame built on a diameter pair?")
    # angles in the (possibly x-mirrored) frame where the anchor is the origin
    ang = np.arctan2(Y, U)
    rays = _sorted_top_down(s, c, far, ang[far], sgn)
    ray_ang = ang[rays]
    edges = [np.column_stack([np.full(len(rays), c), rays])]
    targets_used = {}
    if len(near):
        wedge = _assign_wedges(s, c, rays, ray_ang, near, ang[near], sgn)
        srt = np.argsort(wedge, kind="stable")
        wedge_s, near_s = wedge[srt], near[srt]
        bounds = np.flatnonzero(np.diff(wedge_s)) + 1
        for grp_w, grp in zip(np.split(wedge_s, bounds), np.split(near_s, bounds)):
            j = int(grp_w[0])
            cands = [c]
            if j > 0:
                cands.append(int(rays[j - 1]))
            if j < len(rays):
                cands.append(int(rays[j]))
            best_t, best_len = None, -1.0
            for t in cands:
                dx = s.xs[grp] - s.xs[t]
                dy = s.ys[grp] - s.ys[t]
                tot = math.fsum(np.sqrt(dx * dx + dy * dy).tolist())
                if tot > best_len:
                    best_t, best_len = t, tot
            targets_used[j] = best_t
            edges.append(np.column_stack([grp, np.full(len(grp), best_t)]))
    e = np.concatenate(edges)
    return Structure.from_edges(s, e, StructureKind.EXTENDED_STAR, center=int(c), side=anchor.value,
                                n_far=int(len(far)), wedges=len(targets_used))


def _diameter_frame(s: PointSet):
    (i, j), d = diameter(s)
    f = Frame.from_pair(s, i, j)
    _, Y = f.coords(s)
    h = int(np.argmax(np.abs(Y)))
    if Y[h] < 0:
        f = f.with_reflect(True)
    return f, d, h


def a2(s: PointSet, mst_length: float | None = None):
    t0 = time.perf_counter()
    (i, j), d = diameter(s)
    sa, sb = star(s, i), star(s, j)
    out = longest([sa, sb])
    rep = new_report("a2", s)
    rep.kind = out.kind.value
    rep.length = out.length
    rep.components = {"S_a": sa.length, "S_b": sb.length}
    rep.extra["diameter_pair"] = [i, j]
    rep.audit("star_pair_sum", (sa.length + sb.length) / d, s.n)
    if mst_length is not None:
        rep.oracles["max_spanning_tree"] = mst_length
        rep.ratio("vs_max_spanning_tree", "max_spanning_tree", mst_length)
        if s.n > 2:
            rep.audit("star_ratio", out.length, s.n / (2 * s.n - 2) * mst_length)
    rep.wall_time = time.perf_counter() - t0
    return out, rep


def middle_dmax(s: PointSet, f: Frame, X=None, Y=None, hull=None, chunk: int = 2048):
    """Largest farthest-point distance (frame units) over middle-strip points near the axis.

    ``None`` when no point qualifies.
    """
    if X is None:
        X, Y = f.coords(s)
    lo, hi = STRIPS.lines[1], STRIPS.lines[2]
    sel = np.flatnonzero((X >= lo) & (X < hi) & (np.abs(Y) <= MIDDLE_Y))
    if len(sel) == 0:
        return None
    if hull is None:
        hull = convex_hull(s).hull
    hv = np.asarray(hull, dtype=np.intp)
    best = 0.0
    for k in range(0, len(sel), chunk):
        p = sel[k:k + chunk]
        dx = s.xs[p, None] - s.xs[None, hv]
        dy = s.ys[p, None] - s.ys[None, hv]
        best = max(best, float(np.sqrt(dx * dx + dy * dy).max()))
    return best * f.scale


def a3(s: PointSet, mst_length: float | None = None, dmax_bound: float | None = None):
    t0 = time.perf_counter()
    f, d, h = _diameter_frame(s)
    X, Y = f.coords(s)
    n = s.n
    structs = {
        "S_a": star(s, f.a),
        "S_b": star(s, f.b),
        "S_h": star(s, h),
        "E_a": extended_star(s, f, Side.A_SIDE),
        "E_b": extended_star(s, f, Side.B_SIDE),
    }
    out = longest(structs.values())
    winner = next(k for k, v in structs.items() if v is out)
    c = STRIPS
    l1, l2, l3, l4 = c.lines
    sum_abs_y = math.fsum(np.abs(Y).tolist())
    y_h = float(Y[h])
    n_a = int(np.count_nonzero(X < l2))
    n_b = int(np.count_nonzero(X >= l3))
    n_m = n - n_a - n_b
    if sum_abs_y >= c.delta * n:
        case = 1
    elif y_h >= c.t:
        case = 2
    elif n_a + n_b >= (1 - c.z) * n:
        case = 3
    else:
        case = 4

    rep = new_report("a3", s)
    rep.kind = out.kind.value
    rep.length = out.length
    rep.components = {k: v.length for k, v in structs.items()}
    rep.extra.update(
        winner=winner, case=case, sum_abs_y=sum_abs_y, y_h=y_h, n_a=n_a, n_b=n_b, n_m=n_m,
        diameter_pair=[f.a, f.b], h=h, reflect=f.reflect,
    )
    L = {k: v.length / d for k, v in structs.items()}
    rep.audit("star_pair_sum", L["S_a"] + L["S_b"], n)
    if sum_abs_y >= c.delta * n:
        rep.audit("star_pair_offaxis", L["S_a"] + L["S_b"], 2 * n * math.sqrt(0.25 + c.delta ** 2))
    k6 = (1 + c.w) / 4
    rep.audit("extended_star_a", L["E_a"], k6 * (n + n_b))
    rep.audit("extended_star_b", L["E_b"], k6 * (n + n_a))
    if sum_abs_y <= c.delta * n and y_h >= c.t:
        rep.audit("high_star", L["S_h"], (c.t - c.delta) * n)
    if abs(y_h) <= c.t:
        md = middle_dmax(s, f, X, Y)
        if md is not None:
            rep.audit("middle_dmax", MIDDLE_DMAX, md)
    if mst_length is not None:
        tree_oracle_audits(rep, s, mst_length, dmax_bound)
    rep.wall_time = time.perf_counter() - t0
    return out, rep


def tree_oracle_audits(rep: RunReport, s: PointSet, mst_length: float, dmax_bound: float | None = None):
    d = rep.diameter
    rep.oracles["max_spanning_tree"] = mst_length
    rep.ratio("vs_max_spanning_tree", "max_spanning_tree", mst_length)
    rep.audit("tree_ratio", rep.length, TREE_RATIO * mst_length, tol=AUDIT_TOL * d)
    if dmax_bound is not None:
        rep.audit("tree_dmax_bound", dmax_bound, mst_length, tol=AUDIT_TOL * d)
