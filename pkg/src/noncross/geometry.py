"""Planar primitives: point sets, structures, hull, diameter, width, validators."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import (
    CollinearTripleError,
    CrossingError,
    DuplicatePointError,
    StructureError,
)
from .predicates import orient


class Orientation(IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinate in {self!r}")


class PointSet:
    """Ordered planar points in general position.

    Coordinates live in an ``(n, 2)`` float64 array; ``xs`` and ``ys`` are
    contiguous column copies handed to the kernels.  Pass ``validate=False``
    only for inputs whose general position is known by construction.
    """

    __slots__ = ("xy", "xs", "ys")

    def __init__(self, coords: Iterable, validate: bool = True):
        xy = np.array([(p.x, p.y) if isinstance(p, Point) else tuple(p) for p in coords], dtype=np.float64)
        xy = xy.reshape(-1, 2)
        if len(xy) < 2:
            raise ValueError("a point set needs at least two points")
        if not np.isfinite(xy).all():
            raise ValueError("coordinates must be finite")
        xy.setflags(write=False)
        self.xy = xy
        self.xs = np.ascontiguousarray(xy[:, 0])
        self.ys = np.ascontiguousarray(xy[:, 1])
        if validate:
            validate_general_position(self)

    @classmethod
    def from_array(cls, xy, validate: bool = True) -> "PointSet":
        return cls(np.asarray(xy, dtype=np.float64), validate=validate)

    @property
    def n(self) -> int:
        return len(self.xy)

    def __len__(self):
        return len(self.xy)

    def __getitem__(self, i) -> Point:
        return Point(float(self.xy[i, 0]), float(self.xy[i, 1]))

    def __iter__(self):
        return (self[i] for i in range(len(self)))

    def __repr__(self):
        return f"PointSet(n={self.n})"

    def subset(self, idx) -> "PointSet":
        return PointSet(self.xy[np.asarray(idx, dtype=np.intp)], validate=False)

    def dist(self, i: int, j: int) -> float:
        dx = self.xs[i] - self.xs[j]
        dy = self.ys[i] - self.ys[j]
        return math.sqrt(dx * dx + dy * dy)

    def distance_matrix(self) -> np.ndarray:
        dx = self.xs[:, None] - self.xs[None, :]
        dy = self.ys[:, None] - self.ys[None, :]
        return np.sqrt(dx * dx + dy * dy)

    def orient(self, a: int, b: int, c: int) -> int:
        return orient(self.xs[a], self.ys[a], self.xs[b], self.ys[b], self.xs[c], self.ys[c])


class StructureKind(str, Enum):
    PATH = "PATH"
    CYCLE = "CYCLE"
    TREE = "TREE"
    STAR = "STAR"
    EXTENDED_STAR = "EXTENDED_STAR"
    EDGESET = "EDGESET"


TREE_KINDS = (StructureKind.TREE, StructureKind.STAR, StructureKind.EXTENDED_STAR)


def edges_length(s: PointSet, edges) -> float:
    e = np.asarray(edges, dtype=np.intp).reshape(-1, 2)
    dx = s.xs[e[:, 0]] - s.xs[e[:, 1]]
    dy = s.ys[e[:, 0]] - s.ys[e[:, 1]]
    return math.fsum(np.sqrt(dx * dx + dy * dy).tolist())


@dataclass(frozen=True)
class Structure:
    """An edge set over point indices with its Euclidean length.

    Paths and cycles also carry their vertex ``order``; ``info`` holds
    per-algorithm annotations (flags, which candidate won, ...).
    """

    kind: StructureKind
    edges: tuple
    length: float
    order: tuple | None = None
    info: dict = field(default_factory=dict, compare=False)

    @classmethod
    def path(cls, s: PointSet, order: Sequence[int], **info) -> "Structure":
        order = tuple(int(v) for v in order)
        edges = tuple(zip(order[:-1], order[1:]))
        return cls(StructureKind.PATH, edges, edges_length(s, edges), order, info)

    @classmethod
    def cycle(cls, s: PointSet, order: Sequence[int], **info) -> "Structure":
        order = tuple(int(v) for v in order)
        edges = tuple(zip(order, order[1:] + order[:1]))
        return cls(StructureKind.CYCLE, edges, edges_length(s, edges), order, info)

    @classmethod
    def from_edges(cls, s: PointSet, edges, kind=StructureKind.TREE, **info) -> "Structure":
        edges = tuple((int(u), int(v)) for u, v in edges)
        return cls(StructureKind(kind), edges, edges_length(s, edges), None, info)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_arrays(self):
        e = np.asarray(self.edges, dtype=np.intp).reshape(-1, 2)
        return e[:, 0].copy(), e[:, 1].copy()

    def canonical_order(self) -> tuple:
        """Direction-free representative of a path order (for tie-breaks)."""
        if self.order is None:
            return tuple(sorted(tuple(sorted(e)) for e in self.edges))
        return min(self.order, self.order[::-1])


@dataclass(frozen=True)
class HullInfo:
    hull: tuple
    perimeter: float

    @property
    def h(self) -> int:
        return len(self.hull)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    return Orientation(orient(p.x, p.y, q.x, q.y, r.x, r.y))


def segments_cross(a, b) -> bool:
    """True iff the open segments ``a`` and ``b`` (pairs of points) properly cross."""
    (p1, p2), (q1, q2) = ((tuple(map(_as_tuple, a))), tuple(map(_as_tuple, b)))
    if {p1, p2} & {q1, q2}:
        return False
    o1 = orient(*p1, *p2, *q1)
    o2 = orient(*p1, *p2, *q2)
    if o1 * o2 >= 0:
        return False
    return orient(*q1, *q2, *p1) * orient(*q1, *q2, *p2) < 0


def _as_tuple(p):
    if isinstance(p, Point):
        return (p.x, p.y)
    return (float(p[0]), float(p[1]))


def find_general_position_violation(s: PointSet):
    """``None`` if ``s`` is in general position, else ``("duplicate", (i, j))``
    or ``("collinear", (i, j, k))``."""
    xs, ys = s.xs, s.ys
    order = np.lexsort((ys, xs))
    same = (xs[order[1:]] == xs[order[:-1]]) & (ys[order[1:]] == ys[order[:-1]])
    if same.any():
        k = int(np.argmax(same))
        return "duplicate", tuple(sorted((int(order[k]), int(order[k + 1]))))
    tri = kernels.collinear_triple(xs, ys)
    if tri is not None:
        return "collinear", tri
    return None


def validate_general_position(s: PointSet) -> None:
    bad = find_general_position_violation(s)
    if bad is None:
        return
    kind, idx = bad
    if kind == "duplicate":
        raise DuplicatePointError(idx)
    raise CollinearTripleError(idx)


def find_crossing(s: PointSet, st: Structure):
    """First pair of edge positions ``(i, j)`` that cross, or ``None``."""
    if st.m < 2:
        return None
    eu, ev = st.edge_arrays()
    return kernels.first_crossing(s.xs, s.ys, eu, ev)


def validate_noncrossing(s: PointSet, st: Structure) -> None:
    pair = find_crossing(s, st)
    if pair is not None:
        raise CrossingError(pair)


def check_structure(s: PointSet, st: Structure, rel_tol: float = 1e-12) -> None:
    """Kind-specific connectivity invariants plus the stored length."""
    n = s.n
    edges = np.asarray(st.edges, dtype=np.intp).reshape(-1, 2)
    if len(edges) and (edges.min() < 0 or edges.max() >= n):
        raise StructureError("edge index out of range")
    if (edges[:, 0] == edges[:, 1]).any():
        raise StructureError("self-loop")
    recomputed = edges_length(s, edges)
    if abs(recomputed - st.length) > rel_tol * max(1.0, abs(recomputed)):
        raise StructureError(f"stored length {st.length} != recomputed {recomputed}")
    kind = st.kind
    if kind in (StructureKind.PATH, StructureKind.CYCLE):
        order = st.order
        if order is None or sorted(order) != list(range(n)):
            raise StructureError(f"{kind.value} order must visit every point exactly once")
        want = n - 1 if kind is StructureKind.PATH else n
        if len(edges) != want:
            raise StructureError(f"{kind.value} needs {want} edges, has {len(edges)}")
        if kind is StructureKind.CYCLE and n < 3:
            raise StructureError("a cycle needs at least three points")
        expect = list(zip(order[:-1], order[1:]))
        if kind is StructureKind.CYCLE:
            expect.append((order[-1], order[0]))
        if [tuple(e) for e in edges.tolist()] != expect:
            raise StructureError("edges do not follow the stored order")
    elif kind in TREE_KINDS:
        if len(edges) != n - 1:
            raise StructureError(f"tree needs {n - 1} edges, has {len(edges)}")
        parent = list(range(n))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for u, v in edges.tolist():
            ru, rv = find(u), find(v)
            if ru == rv:
                raise StructureError("tree contains a cycle")
            parent[ru] = rv


def convex_hull(s: PointSet) -> HullInfo:
    hull = kernels.convex_hull(s.xs, s.ys)
    h = len(hull)
    if h < 2:
        return HullInfo(tuple(int(v) for v in hull), 0.0)
    nxt = np.roll(hull, -1)
    dx = s.xs[hull] - s.xs[nxt]
    dy = s.ys[hull] - s.ys[nxt]
    per = math.fsum(np.sqrt(dx * dx + dy * dy).tolist())
    return HullInfo(tuple(int(v) for v in hull), per)


def _antipodal_pairs(xs, ys, hull):
    h = len(hull)
    if h == 2:
        return [(hull[0], hull[1])]
    x, y = xs[hull].tolist(), ys[hull].tolist()

    def area(i, j, k):
        return abs((x[j] - x[i]) * (y[k] - y[i]) - (y[j] - y[i]) * (x[k] - x[i]))

    pairs = []
    j = 1
    for i in range(h):
        i1 = (i + 1) % h
        if j == i or j == i1:
            j = (i1 + 1) % h
        while True:
            j1 = (j + 1) % h
            if j1 == i:
                break
            a0, a1 = area(i, i1, j), area(i, i1, j1)
            if a1 > a0:
                j = j1
            else:
                break
        pairs.append((i, j))
        pairs.append((i1, j))
        # parallel or float-indistinguishable opposite edge: both ends count
        j1 = (j + 1) % h
        if j1 != i:
            a0, a1 = area(i, i1, j), area(i, i1, j1)
            if a1 >= a0 - 1e-12 * max(a0, 1e-300):
                pairs.append((i, j1))
                pairs.append((i1, j1))
    return [(hull[a], hull[b]) for a, b in pairs if a != b]


def diameter(s: PointSet):
    """Farthest pair ``((i, j), D)`` with ``i < j``; ties go to the smallest pair."""
    hull = np.array(convex_hull(s).hull, dtype=np.intp)
    best_key, best = None, None
    for a, b in _antipodal_pairs(s.xs, s.ys, hull):
        i, j = (int(a), int(b)) if a < b else (int(b), int(a))
        dx = s.xs[i] - s.xs[j]
        dy = s.ys[i] - s.ys[j]
        d2 = dx * dx + dy * dy
        key = (-d2, i, j)
        if best_key is None or key < best_key:
            best_key, best = key, (i, j)
    return best, math.sqrt(-best_key[0])


def width(s: PointSet, alpha: float, hull=None) -> float:
    """Extent of the projections onto direction ``alpha``.

    This is the width of the thinnest strip whose bounding lines are
    orthogonal to ``(cos alpha, sin alpha)``; at ``alpha = 0`` it is the
    x-extent.  Integrating over ``[0, pi)`` gives the hull perimeter.
    """
    if hull is None:
        hull = convex_hull(s).hull
    idx = np.asarray(hull, dtype=np.intp)
    proj = s.xs[idx] * math.cos(alpha) + s.ys[idx] * math.sin(alpha)
    return float(proj.max() - proj.min())


def longest(structures):
    """Longest structure; equal lengths go to the smallest canonical order."""
    best = None
    for st in structures:
        if st is None:
            continue
        if best is None or st.length > best.length or (
            st.length == best.length and st.canonical_order() < best.canonical_order()
        ):
            best = st
    return best
