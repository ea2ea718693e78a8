"""Plain-text formats for point sets and structures.

Points: one ``x y`` pair per line, ``#`` starts a comment, blank lines are
ignored.  Structures: a header ``kind <KIND> n <count> length <value>``
followed by one ``i j`` edge per line (0-based).
"""
from __future__ import annotations

import math
from pathlib import Path

from .errors import ParseError
from .geometry import PointSet, Structure, StructureKind


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _float(tok, no):
    try:
        v = float(tok)
    except ValueError:
        raise ParseError(no, f"not a number: {tok!r}") from None
    if not math.isfinite(v):
        raise ParseError(no, f"non-finite coordinate {tok!r}")
    return v


def parse_points(text: str, validate: bool = True) -> PointSet:
    coords = []
    for no, toks in _lines(text):
        if len(toks) != 2:
            raise ParseError(no, f"expected 2 coordinates, got {len(toks)}")
        coords.append((_float(toks[0], no), _float(toks[1], no)))
    if len(coords) < 2:
        raise ParseError(0, "a point set needs at least two points")
    return PointSet(coords, validate=validate)


def format_points(s: PointSet) -> str:
    return "".join(f"{_fmt(x)} {_fmt(y)}\n" for x, y in s.xy.tolist())


def load(path, validate: bool = True) -> PointSet:
    return parse_points(Path(path).read_text(encoding="utf-8"), validate=validate)


def save(path, s: PointSet) -> None:
    Path(path).write_text(format_points(s), encoding="utf-8")


def format_structure(st: Structure, n: int) -> str:
    out = [f"kind {st.kind.value} n {n} length {_fmt(st.length)}\n"]
    out.extend(f"{u} {v}\n" for u, v in st.edges)
    return "".join(out)


def _walk(edges, n_vertices, closed):
    """Vertex order of a path or cycle given as an edge list; ``None`` if it is not one."""
    adj = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if not adj or any(len(nb) > 2 for nb in adj.values()):
        return None
    if closed:
        start = edges[0][0]
    else:
        ends = sorted(v for v, nb in adj.items() if len(nb) == 1)
        if len(ends) != 2:
            return None
        start = ends[0]
    order, prev, cur = [start], None, start
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        if not nxt or (closed and nxt[0] == start):
            break
        prev, cur = cur, nxt[0]
        if cur in order:
            return None
        order.append(cur)
    return order if len(order) == n_vertices else None


def parse_structure(text: str, s: PointSet) -> Structure:
    rows = list(_lines(text))
    if not rows:
        raise ParseError(0, "empty structure file")
    no, head = rows[0]
    if len(head) != 6 or head[0] != "kind" or head[2] != "n" or head[4] != "length":
        raise ParseError(no, "header must read 'kind <KIND> n <count> length <value>'")
    try:
        kind = StructureKind(head[1])
    except ValueError:
        raise ParseError(no, f"unknown kind {head[1]!r}") from None
    try:
        n = int(head[3])
    except ValueError:
        raise ParseError(no, f"bad count {head[3]!r}") from None
    if n != s.n:
        raise ParseError(no, f"structure is over {n} points, point set has {s.n}")
    _float(head[5], no)
    edges = []
    for no, toks in rows[1:]:
        if len(toks) != 2:
            raise ParseError(no, f"expected an edge 'i j', got {len(toks)} tokens")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(no, "edge endpoints must be integers") from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(no, f"bad edge {u} {v}")
        edges.append((u, v))
    if kind in (StructureKind.PATH, StructureKind.CYCLE):
        closed = kind is StructureKind.CYCLE
        order = _walk(edges, n, closed)
        if order is None:
            raise ParseError(rows[0][0], f"edges do not form a Hamiltonian {kind.value.lower()}")
        return Structure.cycle(s, order) if closed else Structure.path(s, order)
    return Structure.from_edges(s, edges, kind)


def load_structure(path, s: PointSet) -> Structure:
    return parse_structure(Path(path).read_text(encoding="utf-8"), s)


def save_structure(path, st: Structure, n: int) -> None:
    Path(path).write_text(format_structure(st, n), encoding="utf-8")
