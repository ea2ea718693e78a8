"""Pure-Python versions of the hot loops.

Each function mirrors one in ``_kernels.pyx`` argument for argument and must
return identical results; ``tests/test_kernels.py`` runs both side by side.
Coordinates arrive as contiguous float64 arrays, index arguments as intp.
"""
import itertools

import numpy as np

from .predicates import orient, orient_arrays

BACKEND = "python"


def convex_hull(xs, ys):
    n = len(xs)
    order = np.lexsort((ys, xs))
    if n < 3:
        return order.astype(np.intp)
    x, y = xs.tolist(), ys.tolist()

    def chain(seq):
        out = []
        for i in seq:
            while len(out) >= 2 and orient(x[out[-2]], y[out[-2]], x[out[-1]], y[out[-1]], x[i], y[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    seq = order.tolist()
    lower = chain(seq)
    upper = chain(seq[::-1])
    return np.array(lower[:-1] + upper[:-1], dtype=np.intp)


def segment_crossings(xs, ys, a, b, eu, ev):
    eu = np.asarray(eu, dtype=np.intp)
    ev = np.asarray(ev, dtype=np.intp)
    if len(eu) == 0:
        return np.zeros(0, dtype=bool)
    o1 = orient_arrays(xs[a], ys[a], xs[b], ys[b], xs[eu], ys[eu])
    o2 = orient_arrays(xs[a], ys[a], xs[b], ys[b], xs[ev], ys[ev])
    o3 = orient_arrays(xs[eu], ys[eu], xs[ev], ys[ev], xs[a], ys[a])
    o4 = orient_arrays(xs[eu], ys[eu], xs[ev], ys[ev], xs[b], ys[b])
    shared = (eu == a) | (eu == b) | (ev == a) | (ev == b)
    return (o1.astype(int) * o2 < 0) & (o3.astype(int) * o4 < 0) & ~shared


def first_crossing(xs, ys, eu, ev):
    eu = np.asarray(eu, dtype=np.intp)
    ev = np.asarray(ev, dtype=np.intp)
    for i in range(len(eu) - 1):
        hit = segment_crossings(xs, ys, eu[i], ev[i], eu[i + 1:], ev[i + 1:])
        if hit.any():
            return i, i + 1 + int(np.argmax(hit))
    return None


def halving_pairs(xs, ys):
    """Pairs (i, j), i < j, whose line leaves a median split of the others."""
    n = len(xs)
    if n == 2:
        return np.array([[0, 1]], dtype=np.intp)
    if n % 2 == 0:
        targets = {(n - 2) // 2}
    else:
        targets = {(n - 3) // 2, (n - 1) // 2}
    out = []
    for i in range(n - 1):
        js = np.arange(i + 1, n)
        # left counts of line i->j over every third point k
        o = orient_arrays(xs[i], ys[i], xs[js, None], ys[js, None], xs[None, :], ys[None, :])
        left = (o > 0).sum(axis=1)
        for j, cnt in zip(js.tolist(), left.tolist()):
            if cnt in targets:
                out.append((i, j))
    return np.array(out, dtype=np.intp).reshape(-1, 2)


def _tangent(x, y, reds, blues, r, b, sign):
    changed = True
    while changed:
        changed = False
        for p in blues:
            if p != b and sign * orient(x[r], y[r], x[b], y[b], x[p], y[p]) > 0:
                b = p
                changed = True
        for p in reds:
            if p != r and sign * orient(x[r], y[r], x[b], y[b], x[p], y[p]) > 0:
                r = p
                changed = True
    return r, b


def bridge(xs, ys, reds, blues, sign):
    """Red-blue hull edge of reds+blues with every point right (sign=+1) or left (-1) of r->b."""
    reds, blues = list(map(int, reds)), list(map(int, blues))
    return _tangent(xs.tolist(), ys.tolist(), reds, blues, reds[0], blues[0], sign)


def top_bridge_order(xs, ys, reds, blues):
    x, y = xs.tolist(), ys.tolist()
    reds, blues = list(map(int, reds)), list(map(int, blues))
    if not reds or not blues:
        return np.array(reds + blues, dtype=np.intp)
    r, b = _tangent(x, y, reds, blues, reds[0], blues[0], 1)
    if len(blues) > len(reds):
        order, last_blue = [b], True
        blues.remove(b)
    else:
        order, last_blue = [r], False
        reds.remove(r)
    while reds and blues:
        if r not in reds:
            r = reds[0]
        if b not in blues:
            b = blues[0]
        r, b = _tangent(x, y, reds, blues, r, b, 1)
        if last_blue:
            order.append(r)
            reds.remove(r)
        else:
            order.append(b)
            blues.remove(b)
        last_blue = not last_blue
    order.extend(reds + blues)
    return np.array(order, dtype=np.intp)


def two_endpoint_order(xs, ys, reds, blues, variant):
    x, y = xs.tolist(), ys.tolist()
    reds, blues = list(map(int, reds)), list(map(int, blues))
    red_set = set(reds)
    r1, b1 = _tangent(x, y, reds, blues, reds[0], blues[0], 1)
    r2, b2 = _tangent(x, y, reds, blues, reds[0], blues[0], -1)
    top, bot = ([r1], [b2]) if variant == 0 else ([b1], [r2])
    for p in (top[0], bot[0]):
        (reds if p in red_set else blues).remove(p)
    tr, tb, br, bb = r1, b1, r2, b2
    while reds:
        if tr not in reds:
            tr = reds[0]
        if tb not in blues:
            tb = blues[0]
        if br not in reds:
            br = reds[0]
        if bb not in blues:
            bb = blues[0]
        tr, tb = _tangent(x, y, reds, blues, tr, tb, 1)
        br, bb = _tangent(x, y, reds, blues, br, bb, -1)
        t = tr if top[-1] not in red_set else tb
        u = br if bot[-1] not in red_set else bb
        top.append(t)
        bot.append(u)
        for p in (t, u):
            (reds if p in red_set else blues).remove(p)
    return np.array(top + bot[::-1], dtype=np.intp)


def _edge_ends(seq, closed):
    seq = np.asarray(seq, dtype=np.intp)
    m = len(seq)
    ne = max(m if closed else m - 1, 0)
    return seq[:ne], seq[(np.arange(ne) + 1) % m] if ne else seq[:0]


def _sees(xs, ys, eu, ev, k, q):
    u, v = int(eu[k]), int(ev[k])
    others = np.arange(len(eu)) != k
    ou, ov = eu[others], ev[others]
    for a, b in ((q, u), (q, v), (u, v)):
        if segment_crossings(xs, ys, a, b, ou, ov).any():
            return False
    pts = np.unique(np.concatenate([ou, ov]))
    pts = pts[(pts != u) & (pts != v) & (pts != q)]
    tri = orient(xs[q], ys[q], xs[u], ys[u], xs[v], ys[v])
    s1 = orient_arrays(xs[q], ys[q], xs[u], ys[u], xs[pts], ys[pts])
    s2 = orient_arrays(xs[u], ys[u], xs[v], ys[v], xs[pts], ys[pts])
    s3 = orient_arrays(xs[v], ys[v], xs[q], ys[q], xs[pts], ys[pts])
    return not ((s1 == tri) & (s2 == tri) & (s3 == tri)).any()


def visible_edges(xs, ys, seq, closed, q):
    eu, ev = _edge_ends(seq, closed)
    return np.array([_sees(xs, ys, eu, ev, k, q) for k in range(len(eu))], dtype=bool)


def first_visible_edge(xs, ys, seq, closed, q):
    eu, ev = _edge_ends(seq, closed)
    for k in range(len(eu)):
        if _sees(xs, ys, eu, ev, k, q):
            return k
    return -1


def _cross_idx(x, y, a, b, c, d):
    if a == c or a == d or b == c or b == d:
        return False
    if orient(x[a], y[a], x[b], y[b], x[c], y[c]) * orient(x[a], y[a], x[b], y[b], x[d], y[d]) >= 0:
        return False
    return orient(x[c], y[c], x[d], y[d], x[a], y[a]) * orient(x[c], y[c], x[d], y[d], x[b], y[b]) < 0


def brute_path(xs, ys, dist, noncrossing):
    n = len(xs)
    x, y = xs.tolist(), ys.tolist()
    d = dist.tolist()
    best, best_order = -1.0, None
    if n == 1:
        return 0.0, np.array([0], dtype=np.intp)
    cur = []
    used = [False] * n

    def rec(length):
        nonlocal best, best_order
        depth = len(cur)
        if depth == n:
            if cur[0] < cur[-1] and length > best:
                best, best_order = length, list(cur)
            return
        for v in range(n):
            if used[v]:
                continue
            if depth:
                u = cur[-1]
                if noncrossing and any(
                    _cross_idx(x, y, u, v, cur[k], cur[k + 1]) for k in range(depth - 2)
                ):
                    continue
                nl = length + d[u][v]
            else:
                nl = 0.0
            used[v] = True
            cur.append(v)
            rec(nl)
            cur.pop()
            used[v] = False

    rec(0.0)
    return best, np.array(best_order, dtype=np.intp)


def brute_cycle(xs, ys, dist, noncrossing):
    n = len(xs)
    x, y = xs.tolist(), ys.tolist()
    d = dist.tolist()
    best, best_order = -1.0, None
    cur = [0]
    used = [False] * n
    used[0] = True

    def rec(length):
        nonlocal best, best_order
        depth = len(cur)
        if depth == n:
            if cur[1] >= cur[-1]:
                return
            last = cur[-1]
            if noncrossing and any(
                _cross_idx(x, y, last, 0, cur[k], cur[k + 1]) for k in range(1, n - 2)
            ):
                return
            total = length + d[last][0]
            if total > best:
                best, best_order = total, list(cur)
            return
        u = cur[-1]
        for v in range(1, n):
            if used[v]:
                continue
            if noncrossing and any(
                _cross_idx(x, y, u, v, cur[k], cur[k + 1]) for k in range(depth - 2)
            ):
                continue
            used[v] = True
            cur.append(v)
            rec(length + d[u][v])
            cur.pop()
            used[v] = False

    rec(0.0)
    return best, np.array(best_order, dtype=np.intp)


def _prufer_decode(seq, n):
    degree = [1] * n
    for a in seq:
        degree[a] += 1
    edges = []
    for a in seq:
        for j in range(n):
            if degree[j] == 1:
                edges.append((j, a))
                degree[j] -= 1
                degree[a] -= 1
                break
    u, v = [j for j in range(n) if degree[j] == 1]
    edges.append((u, v))
    return edges


def brute_tree(xs, ys, dist, noncrossing):
    n = len(xs)
    x, y = xs.tolist(), ys.tolist()
    d = dist.tolist()
    if n == 2:
        return d[0][1], np.array([[0, 1]], dtype=np.intp)
    best, best_edges = -1.0, None
    for seq in itertools.product(range(n), repeat=n - 2):
        edges = _prufer_decode(seq, n)
        length = 0.0
        for u, v in edges:
            length += d[u][v]
        if length <= best:
            continue
        if noncrossing and any(
            _cross_idx(x, y, *edges[i], *edges[j])
            for i in range(n - 1)
            for j in range(i + 1, n - 1)
        ):
            continue
        best, best_edges = length, edges
    return best, np.array(best_edges, dtype=np.intp)


def prim_max_tree(xs, ys):
    n = len(xs)
    parent = np.full(n, -1, dtype=np.intp)
    in_tree = np.zeros(n, dtype=bool)
    in_tree[0] = True
    dx = xs - xs[0]
    dy = ys - ys[0]
    best = np.sqrt(dx * dx + dy * dy)
    best[0] = -1.0
    parent[1:] = 0
    for _ in range(n - 1):
        v = int(np.argmax(np.where(in_tree, -1.0, best)))
        in_tree[v] = True
        dx = xs - xs[v]
        dy = ys - ys[v]
        dv = np.sqrt(dx * dx + dy * dy)
        better = (~in_tree) & (dv > best)
        best[better] = dv[better]
        parent[better] = v
    return parent



COLLINEAR_WINDOW = 1e-9


def _row_directions(xs, ys, i):
    """Later points sorted by direction from ``i`` modulo pi, wrapped once."""
    js = np.arange(i + 1, len(xs))
    ang = np.mod(np.arctan2(ys[js] - ys[i], xs[js] - xs[i]), np.pi)
    srt = np.argsort(ang, kind="stable")
    a_s, j_s = ang[srt], js[srt]
    wrap = a_s < COLLINEAR_WINDOW
    return np.concatenate([a_s, a_s[wrap] + np.pi]), np.concatenate([j_s, j_s[wrap]])


def collinear_triple(xs, ys):
    """First exactly collinear triple ``(i, j, k)`` (sorted), or ``None``.

    For each ``i`` the directions to later points are sorted modulo pi;
    a collinear triple shows up as near-equal angles and is confirmed with
    the exact predicate.  Neighbours in the sorted order are always checked.
    """
    n = len(xs)
    for i in range(n - 2):
        a_s, j_s = _row_directions(xs, ys, i)
        m = len(a_s)
        w = 1
        while w < m:
            close = a_s[w:] - a_s[:-w] <= COLLINEAR_WINDOW
            if w == 1:
                close[:] = True
            if not close.any():
                break
            left, right = j_s[:-w][close], j_s[w:][close]
            keep = left != right
            left, right = left[keep], right[keep]
            o = orient_arrays(xs[i], ys[i], xs[left], ys[left], xs[right], ys[right])
            hit = np.nonzero(o == 0)[0]
            if len(hit):
                t = hit[0]
                return tuple(sorted((i, int(left[t]), int(right[t]))))
            w += 1
    return None
