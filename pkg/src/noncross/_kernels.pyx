# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled versions of the hot loops (see ``_pykernels.py`` for the reference).

The orientation filter runs without the GIL; only the rare exact fallback
re-acquires it to call into ``fractions``.
"""
import numpy as np

from libc.math cimport fabs, sqrt
from libc.stdlib cimport malloc, free

from noncross.predicates import exact_orient

BACKEND = "cython"

cdef double EPS = 1.1102230246251565e-16
cdef double CCW_ERRBOUND = (3.0 + 16.0 * EPS) * EPS


cdef int _exact(double ax, double ay, double bx, double by, double cx, double cy) noexcept:
    return exact_orient(ax, ay, bx, by, cx, cy)


cdef inline int orient(double ax, double ay, double bx, double by,
                       double cx, double cy) noexcept nogil:
    cdef double detleft = (ax - cx) * (by - cy)
    cdef double detright = (ay - cy) * (bx - cx)
    cdef double det = detleft - detright
    cdef double bound = CCW_ERRBOUND * (fabs(detleft) + fabs(detright))
    if det > bound:
        return 1
    if -det > bound:
        return -1
    with gil:
        return _exact(ax, ay, bx, by, cx, cy)


cdef inline int orient_i(const double* x, const double* y, Py_ssize_t a,
                         Py_ssize_t b, Py_ssize_t c) noexcept nogil:
    return orient(x[a], y[a], x[b], y[b], x[c], y[c])


cdef inline bint cross_idx(const double* x, const double* y, Py_ssize_t a, Py_ssize_t b,
                           Py_ssize_t c, Py_ssize_t d) noexcept nogil:
    if a == c or a == d or b == c or b == d:
        return 0
    if orient_i(x, y, a, b, c) * orient_i(x, y, a, b, d) >= 0:
        return 0
    return orient_i(x, y, c, d, a) * orient_i(x, y, c, d, b) < 0


def orient_py(double ax, double ay, double bx, double by, double cx, double cy):
    return orient(ax, ay, bx, by, cx, cy)


def convex_hull(double[::1] xs, double[::1] ys):
    cdef Py_ssize_t n = xs.shape[0]
    order_arr = np.lexsort((np.asarray(ys), np.asarray(xs))).astype(np.intp)
    if n < 3:
        return order_arr
    cdef Py_ssize_t[::1] order = order_arr
    out_arr = np.empty(2 * n, dtype=np.intp)
    cdef Py_ssize_t[::1] out = out_arr
    cdef const double* x = &xs[0]
    cdef const double* y = &ys[0]
    cdef Py_ssize_t k = 0, i, t, lower_len
    with nogil:
        for t in range(n):
            i = order[t]
            while k >= 2 and orient_i(x, y, out[k - 2], out[k - 1], i) <= 0:
                k -= 1
            out[k] = i
            k += 1
        lower_len = k + 1
        for t in range(n - 2, -1, -1):
            i = order[t]
            while k >= lower_len and orient_i(x, y, out[k - 2], out[k - 1], i) <= 0:
                k -= 1
            out[k] = i
            k += 1
    return out_arr[:k - 1].copy()


def segment_crossings(double[::1] xs, double[::1] ys, Py_ssize_t a, Py_ssize_t b, eu_in, ev_in):
    cdef Py_ssize_t[::1] eu = np.ascontiguousarray(eu_in, dtype=np.intp)
    cdef Py_ssize_t[::1] ev = np.ascontiguousarray(ev_in, dtype=np.intp)
    cdef Py_ssize_t m = eu.shape[0], k
    out_arr = np.zeros(m, dtype=np.uint8)
    if m == 0:
        return out_arr.astype(bool)
    cdef unsigned char[::1] out = out_arr
    cdef const double* x = &xs[0]
    cdef const double* y = &ys[0]
    with nogil:
        for k in range(m):
            out[k] = cross_idx(x, y, a, b, eu[k], ev[k])
    return out_arr.astype(bool)


def first_crossing(double[::1] xs, double[::1] ys, eu_in, ev_in):
    cdef Py_ssize_t[::1] eu = np.ascontiguousarray(eu_in, dtype=np.intp)
    cdef Py_ssize_t[::1] ev = np.ascontiguousarray(ev_in, dtype=np.intp)
    cdef Py_ssize_t m = eu.shape[0], i, j
    cdef Py_ssize_t fi = -1, fj = -1
    if m < 2:
        return None
    cdef const double* x = &xs[0]
    cdef const double* y = &ys[0]
    with nogil:
        for i in range(m - 1):
            for j in range(i + 1, m):
                if cross_idx(x, y, eu[i], ev[i], eu[j], ev[j]):
                    fi = i
                    fj = j
                    break
            if fi >= 0:
                break
    if fi < 0:
        return None
    return fi, fj


def halving_pairs(double[::1] xs, double[::1] ys):
    cdef Py_ssize_t n = xs.shape[0], i, j, k, cnt
    cdef Py_ssize_t t1, t2
    if n == 2:
        return np.array([[0, 1]], dtype=np.intp)
    if n % 2 == 0:
        t1 = (n - 2) // 2
        t2 = t1
    else:
        t1 = (n - 3) // 2
        t2 = (n - 1) // 2
    cdef const double* x = &xs[0]
    cdef const double* y = &ys[0]
    buf_arr = np.empty((n * (n - 1) // 2, 2), dtype=np.intp)
    cdef Py_ssize_t[:, ::1] buf = buf_arr
    cdef Py_ssize_t m = 0
    with nogil:
        for i in range(n - 1):
            for j in range(i + 1, n):
                cnt = 0
                for k in range(n):
                    if k != i and k != j and orient_i(x, y, i, j, k) > 0:
                        cnt += 1
                if cnt == t1 or cnt == t2:
                    buf[m, 0] = i
                    buf[m, 1] = j
                    m += 1
    return buf_arr[:m].copy()


cdef void _tangent(const double* x, const double* y, Py_ssize_t* reds, Py_ssize_t nr,
                   Py_ssize_t* blues, Py_ssize_t nb, Py_ssize_t* r, Py_ssize_t* b,
                   int sign) noexcept nogil:
    cdef bint changed = 1
    cdef Py_ssize_t i, p, rr = r[0], bb = b[0]
    while changed:
        changed = 0
        for i in range(nb):
            p = blues[i]
            if p != bb and sign * orient(x[rr], y[rr], x[bb], y[bb], x[p], y[p]) > 0:
                bb = p
                changed = 1
        for i in range(nr):
            p = reds[i]
            if p != rr and sign * orient(x[rr], y[rr], x[bb], y[bb], x[p], y[p]) > 0:
                rr = p
                changed = 1
    r[0] = rr
    b[0] = bb


cdef bint _contains(Py_ssize_t* arr, Py_ssize_t m, Py_ssize_t v) noexcept nogil:
    cdef Py_ssize_t i
    for i in range(m):
        if arr[i] == v:
            return 1
    return 0


cdef void _remove(Py_ssize_t* arr, Py_ssize_t* m, Py_ssize_t v) noexcept nogil:
    # order-preserving removal keeps scans identical to the Python twin
    cdef Py_ssize_t i, j
    for i in range(m[0]):
        if arr[i] == v:
            for j in range(i, m[0] - 1):
                arr[j] = arr[j + 1]
            m[0] -= 1
            return


def bridge(double[::1] xs, double[::1] ys, reds_in, blues_in, int sign):
    cdef Py_ssize_t[::1] reds = np.ascontiguousarray(reds_in, dtype=np.intp).copy()
    cdef Py_ssize_t[::1] blues = np.ascontiguousarray(blues_in, dtype=np.intp).copy()
    cdef Py_ssize_t r = reds[0], b = blues[0]
    with nogil:
        _tangent(&xs[0], &ys[0], &reds[0], reds.shape[0], &blues[0], blues.shape[0], &r, &b, sign)
    return int(r), int(b)


def top_bridge_order(double[::1] xs, double[::1] ys, reds_in, blues_in):
    reds_arr = np.ascontiguousarray(reds_in, dtype=np.intp).copy()
    blues_arr = np.ascontiguousarray(blues_in, dtype=np.intp).copy()
    cdef Py_ssize_t nr = reds_arr.shape[0], nb = blues_arr.shape[0]
    if nr == 0 or nb == 0:
        return np.concatenate([reds_arr, blues_arr]).astype(np.intp)
    cdef Py_ssize_t[::1] reds = reds_arr
    cdef Py_ssize_t[::1] blues = blues_arr
    out_arr = np.empty(nr + nb, dtype=np.intp)
    cdef Py_ssize_t[::1] out = out_arr
    cdef const double* x = &xs[0]
    cdef const double* y = &ys[0]
    cdef Py_ssize_t r = reds[0], b = blues[0], k = 0, i
    cdef bint last_blue
    with nogil:
        _tangent(x, y, &reds[0], nr, &blues[0], nb, &r, &b, 1)
        if nb > nr:
            out[0] = b
            last_blue = 1
            _remove(&blues[0], &nb, b)
        else:
            out[0] = r
            last_blue = 0
            _remove(&reds[0], &nr, r)
        k = 1
        while nr > 0 and nb > 0:
            if not _contains(&reds[0], nr, r):
                r = reds[0]
            if not _contains(&blues[0], nb, b):
                b = blues[0]
            _tangent(x, y, &reds[0], nr, &blues[0], nb, &r, &b, 1)
            if last_blue:
                out[k] = r
                _remove(&reds[0], &nr, r)
            else:
                out[k] = b
                _remove(&blues[0], &nb, b)
            k += 1
            last_blue = not last_blue
        for i in range(nr):
            out[k] = reds[i]
            k += 1
        for i in range(nb):
            out[k] = blues[i]
            k += 1
    return out_arr


def two_endpoint_order(double[::1] xs, double[::1] ys, reds_in, blues_in, int variant):
    reds_arr = np.ascontiguousarray(reds_in, dtype=np.intp).copy()
    blues_arr = np.ascontiguousarray(blues_in, dtype=np.intp).copy()
    cdef Py_ssize_t nr = reds_arr.shape[0], nb = blues_arr.shape[0]
    cdef Py_ssize_t total = nr + nb
    cdef Py_ssize_t[::1] reds = reds_arr
    cdef Py_ssize_t[::1] blues = blues_arr
    is_red_arr = np.zeros(xs.shape[0], dtype=np.uint8)
    is_red_arr[reds_arr] = 1
    cdef unsigned char[::1] is_red = is_red_arr
    top_arr = np.empty(total, dtype=np.intp)
    bot_arr = np.empty(total, dtype=np.intp)
    cdef Py_ssize_t[::1] top = top_arr
    cdef Py_ssize_t[::1] bot = bot_arr
    cdef const double* x = &xs[0]
    cdef const double* y = &ys[0]
    cdef Py_ssize_t r1 = reds[0], b1 = blues[0], r2 = reds[0], b2 = blues[0]
    cdef Py_ssize_t nt = 1, nbot = 1, t, u
    with nogil:
        _tangent(x, y, &reds[0], nr, &blues[0], nb, &r1, &b1, 1)
        _tangent(x, y, &reds[0], nr, &blues[0], nb, &r2, &b2, -1)
        if variant == 0:
            top[0] = r1
            bot[0] = b2
            _remove(&reds[0], &nr, r1)
            _remove(&blues[0], &nb, b2)
        else:
            top[0] = b1
            bot[0] = r2
            _remove(&blues[0], &nb, b1)
            _remove(&reds[0], &nr, r2)
        while nr > 0:
            if not _contains(&reds[0], nr, r1):
                r1 = reds[0]
            if not _contains(&blues[0], nb, b1):
                b1 = blues[0]
            if not _contains(&reds[0], nr, r2):
                r2 = reds[0]
            if not _contains(&blues[0], nb, b2):
                b2 = blues[0]
            _tangent(x, y, &reds[0], nr, &blues[0], nb, &r1, &b1, 1)
            _tangent(x, y, &reds[0], nr, &blues[0], nb, &r2, &b2, -1)
            t = r1 if not is_red[top[nt - 1]] else b1
            u = r2 if not is_red[bot[nbot - 1]] else b2
            top[nt] = t
            nt += 1
            bot[nbot] = u
            nbot += 1
            if is_red[t]:
                _remove(&reds[0], &nr, t)
            else:
                _remove(&blues[0], &nb, t)
            if is_red[u]:
                _remove(&reds[0], &nr, u)
            else:
                _remove(&blues[0], &nb, u)
    return np.concatenate([top_arr[:nt], bot_arr[:nbot][::-1]]).astype(np.intp)


def visible_edges(double[::1] xs, double[::1] ys, seq_in, bint closed, Py_ssize_t q):
    cdef Py_ssize_t[::1] seq = np.ascontiguousarray(seq_in, dtype=np.intp)
    cdef Py_ssize_t m = seq.shape[0]
    cdef Py_ssize_t ne = m if closed else m - 1
    out_arr = np.zeros(max(ne, 0), dtype=np.uint8)
    if ne <= 0:
        return out_arr.astype(bool)
    cdef unsigned char[::1] out = out_arr
    cdef const double* x = &xs[0]
    cdef const double* y = &ys[0]
    cdef Py_ssize_t k, j, u, v, a, b, p, side
    cdef int tri
    cdef bint ok
    with nogil:
        for k in range(ne):
            u = seq[k]
            v = seq[(k + 1) % m]
            tri = orient_i(x, y, q, u, v)
            ok = 1
            for j in range(ne):
                if j == k:
                    continue
                a = seq[j]
                b = seq[(j + 1) % m]
                if cross_idx(x, y, q, u, a, b) or cross_idx(x, y, q, v, a, b) or cross_idx(x, y, u, v, a, b):
                    ok = 0
                    break
                for side in range(2):
                    p = a if side == 0 else b
                    if p == u or p == v or p == q:
                        continue
                    if (orient_i(x, y, q, u, p) == tri and orient_i(x, y, u, v, p) == tri
                            and orient_i(x, y, v, q, p) == tri):
                        ok = 0
                        break
                if not ok:
                    break
            out[k] = ok
    return out_arr.astype(bool)


cdef void _dfs_path(Py_ssize_t depth, Py_ssize_t n, const double* x, const double* y,
                    const double* d, Py_ssize_t* cur, bint* used, double length,
                    double* best, Py_ssize_t* best_order, bint nc) noexcept nogil:
    cdef Py_ssize_t v, u, k
    cdef double nl
    cdef bint bad
    if depth == n:
        if cur[0] < cur[n - 1] and length > best[0]:
            best[0] = length
            for k in range(n):
                best_order[k] = cur[k]
        return
    for v in range(n):
        if used[v]:
            continue
        if depth > 0:
            u = cur[depth - 1]
            if nc:
                bad = 0
                for k in range(depth - 2):
                    if cross_idx(x, y, u, v, cur[k], cur[k + 1]):
                        bad = 1
                        break
                if bad:
                    continue
            nl = length + d[u * n + v]
        else:
            nl = 0.0
        used[v] = 1
        cur[depth] = v
        _dfs_path(depth + 1, n, x, y, d, cur, used, nl, best, best_order, nc)
        used[v] = 0


def brute_path(double[::1] xs, double[::1] ys, dist_in, bint noncrossing):
    cdef Py_ssize_t n = xs.shape[0]
    if n == 1:
        return 0.0, np.array([0], dtype=np.intp)
    cdef double[::1] d = np.ascontiguousarray(dist_in, dtype=np.float64).ravel()
    cur_arr = np.zeros(n, dtype=np.intp)
    best_arr = np.zeros(n, dtype=np.intp)
    cdef Py_ssize_t[::1] cur = cur_arr
    cdef Py_ssize_t[::1] bo = best_arr
    cdef double best = -1.0
    cdef bint* usedb = <bint*> malloc(n * sizeof(bint))
    cdef Py_ssize_t i
    for i in range(n):
        usedb[i] = 0
    with nogil:
        _dfs_path(0, n, &xs[0], &ys[0], &d[0], &cur[0], usedb, 0.0, &best, &bo[0], noncrossing)
    free(usedb)
    return best, best_arr


cdef void _dfs_cycle(Py_ssize_t depth, Py_ssize_t n, const double* x, const double* y,
                     const double* d, Py_ssize_t* cur, bint* used, double length,
                     double* best, Py_ssize_t* best_order, bint nc) noexcept nogil:
    cdef Py_ssize_t v, u, k, last
    cdef double total
    cdef bint bad
    if depth == n:
        if cur[1] >= cur[n - 1]:
            return
        last = cur[n - 1]
        if nc:
            for k in range(1, n - 2):
                if cross_idx(x, y, last, 0, cur[k], cur[k + 1]):
                    return
        total = length + d[last * n]
        if total > best[0]:
            best[0] = total
            for k in range(n):
                best_order[k] = cur[k]
        return
    u = cur[depth - 1]
    for v in range(1, n):
        if used[v]:
            continue
        if nc:
            bad = 0
            for k in range(depth - 2):
                if cross_idx(x, y, u, v, cur[k], cur[k + 1]):
                    bad = 1
                    break
            if bad:
                continue
        used[v] = 1
        cur[depth] = v
        _dfs_cycle(depth + 1, n, x, y, d, cur, used, length + d[u * n + v], best, best_order, nc)
        used[v] = 0


def brute_cycle(double[::1] xs, double[::1] ys, dist_in, bint noncrossing):
    cdef Py_ssize_t n = xs.shape[0]
    cdef double[::1] d = np.ascontiguousarray(dist_in, dtype=np.float64).ravel()
    cur_arr = np.zeros(n, dtype=np.intp)
    best_arr = np.zeros(n, dtype=np.intp)
    cdef Py_ssize_t[::1] cur = cur_arr
    cdef Py_ssize_t[::1] bo = best_arr
    cdef double best = -1.0
    cdef bint* usedb = <bint*> malloc(n * sizeof(bint))
    cdef Py_ssize_t i
    for i in range(n):
        usedb[i] = 0
    usedb[0] = 1
    with nogil:
        _dfs_cycle(1, n, &xs[0], &ys[0], &d[0], &cur[0], usedb, 0.0, &best, &bo[0], noncrossing)
    free(usedb)
    return best, best_arr


def brute_tree(double[::1] xs, double[::1] ys, dist_in, bint noncrossing):
    cdef Py_ssize_t n = xs.shape[0]
    cdef double[::1] d = np.ascontiguousarray(dist_in, dtype=np.float64).ravel()
    if n == 2:
        return d[1], np.array([[0, 1]], dtype=np.intp)
    cdef Py_ssize_t L = n - 2, i, j, a, e, f, u, v = -1
    seq_arr = np.zeros(L, dtype=np.intp)
    deg_arr = np.zeros(n, dtype=np.intp)
    eu_arr = np.zeros(n - 1, dtype=np.intp)
    ev_arr = np.zeros(n - 1, dtype=np.intp)
    best_arr = np.zeros((n - 1, 2), dtype=np.intp)
    cdef Py_ssize_t[::1] seq = seq_arr
    cdef Py_ssize_t[::1] deg = deg_arr
    cdef Py_ssize_t[::1] eu = eu_arr
    cdef Py_ssize_t[::1] ev = ev_arr
    cdef Py_ssize_t[:, ::1] be = best_arr
    cdef const double* x = &xs[0]
    cdef const double* y = &ys[0]
    cdef double best = -1.0, length
    cdef bint bad, done = 0
    with nogil:
        while not done:
            for i in range(n):
                deg[i] = 1
            for i in range(L):
                deg[seq[i]] += 1
            for i in range(L):
                a = seq[i]
                for j in range(n):
                    if deg[j] == 1:
                        eu[i] = j
                        ev[i] = a
                        deg[j] -= 1
                        deg[a] -= 1
                        break
            u = -1
            for j in range(n):
                if deg[j] == 1:
                    if u < 0:
                        u = j
                    else:
                        v = j
            eu[L] = u
            ev[L] = v
            length = 0.0
            for i in range(n - 1):
                length += d[eu[i] * n + ev[i]]
            if length > best:
                bad = 0
                if noncrossing:
                    for e in range(n - 1):
                        for f in range(e + 1, n - 1):
                            if cross_idx(x, y, eu[e], ev[e], eu[f], ev[f]):
                                bad = 1
                                break
                        if bad:
                            break
                if not bad:
                    best = length
                    for i in range(n - 1):
                        be[i, 0] = eu[i]
                        be[i, 1] = ev[i]
            # odometer increment, last position fastest (itertools.product order)
            i = L - 1
            while i >= 0:
                seq[i] += 1
                if seq[i] < n:
                    break
                seq[i] = 0
                i -= 1
            if i < 0:
                done = 1
    return best, best_arr


def prim_max_tree(double[::1] xs, double[::1] ys):
    cdef Py_ssize_t n = xs.shape[0], it, v, w
    parent_arr = np.full(n, -1, dtype=np.intp)
    best_arr = np.empty(n, dtype=np.float64)
    in_arr = np.zeros(n, dtype=np.uint8)
    cdef Py_ssize_t[::1] parent = parent_arr
    cdef double[::1] best = best_arr
    cdef unsigned char[::1] in_tree = in_arr
    cdef double dx, dy, dv, bv
    with nogil:
        in_tree[0] = 1
        for w in range(n):
            dx = xs[w] - xs[0]
            dy = ys[w] - ys[0]
            best[w] = sqrt(dx * dx + dy * dy)
            parent[w] = 0
        parent[0] = -1
        for it in range(n - 1):
            v = -1
            bv = -1.0
            for w in range(n):
                if not in_tree[w] and best[w] > bv:
                    bv = best[w]
                    v = w
            in_tree[v] = 1
            for w in range(n):
                if not in_tree[w]:
                    dx = xs[w] - xs[v]
                    dy = ys[w] - ys[v]
                    dv = sqrt(dx * dx + dy * dy)
                    if dv > best[w]:
                        best[w] = dv
                        parent[w] = v
    return parent_arr


cdef bint _sees(const double* x, const double* y, Py_ssize_t[::1] seq, Py_ssize_t m,
                Py_ssize_t ne, Py_ssize_t k, Py_ssize_t q) noexcept nogil:
    cdef Py_ssize_t u = seq[k], v = seq[(k + 1) % m], j, a, b, p, side
    cdef int tri = orient_i(x, y, q, u, v)
    for j in range(ne):
        if j == k:
            continue
        a = seq[j]
        b = seq[(j + 1) % m]
        if cross_idx(x, y, q, u, a, b) or cross_idx(x, y, q, v, a, b) or cross_idx(x, y, u, v, a, b):
            return 0
        for side in range(2):
            p = a if side == 0 else b
            if p == u or p == v or p == q:
                continue
            if (orient_i(x, y, q, u, p) == tri and orient_i(x, y, u, v, p) == tri
                    and orient_i(x, y, v, q, p) == tri):
                return 0
    return 1


def first_visible_edge(double[::1] xs, double[::1] ys, seq_in, bint closed, Py_ssize_t q):
    cdef Py_ssize_t[::1] seq = np.ascontiguousarray(seq_in, dtype=np.intp)
    cdef Py_ssize_t m = seq.shape[0]
    cdef Py_ssize_t ne = m if closed else m - 1
    cdef Py_ssize_t k, found = -1
    if ne <= 0:
        return -1
    cdef const double* x = &xs[0]
    cdef const double* y = &ys[0]
    with nogil:
        for k in range(ne):
            if _sees(x, y, seq, m, ne, k, q):
                found = k
                break
    return found


from noncross._pykernels import _row_directions


def collinear_triple(double[::1] xs, double[::1] ys):
    cdef Py_ssize_t n = xs.shape[0], i, w, m, p, a, b
    cdef double window = 1e-9
    cdef bint any_close
    cdef double[::1] ang
    cdef Py_ssize_t[::1] js
    cdef const double* x = &xs[0]
    cdef const double* y = &ys[0]
    for i in range(n - 2):
        a_np, j_np = _row_directions(np.asarray(xs), np.asarray(ys), i)
        ang = a_np
        js = j_np.astype(np.intp)
        m = ang.shape[0]
        w = 1
        while w < m:
            any_close = w == 1
            for p in range(m - w):
                if w > 1 and ang[p + w] - ang[p] > window:
                    continue
                any_close = 1
                a, b = js[p], js[p + w]
                if a != b and orient_i(x, y, i, a, b) == 0:
                    return tuple(sorted((int(i), int(a), int(b))))
            if not any_close:
                break
            w += 1
    return None
