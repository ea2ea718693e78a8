"""Orientation predicate with a floating filter and an exact rational fallback.

The filter is the classic orient2d bound: the floating determinant is trusted
when its magnitude exceeds ``CCW_ERRBOUND * (|detleft| + |detright|)``.
Anything closer to zero is recomputed with :class:`fractions.Fraction`, which
represents every double exactly.
"""
from fractions import Fraction

import numpy as np

EPS = 2.0 ** -53
CCW_ERRBOUND = (3.0 + 16.0 * EPS) * EPS


def exact_orient(ax, ay, bx, by, cx, cy):
    acx = Fraction(ax) - Fraction(cx)
    bcy = Fraction(by) - Fraction(cy)
    acy = Fraction(ay) - Fraction(cy)
    bcx = Fraction(bx) - Fraction(cx)
    det = acx * bcy - acy * bcx
    return (det > 0) - (det < 0)


def orient(ax, ay, bx, by, cx, cy):
    """Sign of the doubled signed area of triangle abc (+1 CCW, -1 CW, 0 collinear)."""
    detleft = (ax - cx) * (by - cy)
    detright = (ay - cy) * (bx - cx)
    det = detleft - detright
    bound = CCW_ERRBOUND * (abs(detleft) + abs(detright))
    if det > bound:
        return 1
    if -det > bound:
        return -1
    return exact_orient(ax, ay, bx, by, cx, cy)


def orient_arrays(ax, ay, bx, by, cx, cy):
    """Vectorised :func:`orient`; arguments broadcast like numpy arrays."""
    ax, ay, bx, by, cx, cy = np.broadcast_arrays(
        *(np.asarray(v, dtype=np.float64) for v in (ax, ay, bx, by, cx, cy))
    )
    detleft = (ax - cx) * (by - cy)
    detright = (ay - cy) * (bx - cx)
    det = detleft - detright
    bound = CCW_ERRBOUND * (np.abs(detleft) + np.abs(detright))
    out = np.where(det > bound, 1, np.where(-det > bound, -1, 0)).astype(np.int8)
    unsure = ~((det > bound) | (-det > bound))
    if unsure.any():
        for k in zip(*np.nonzero(unsure)):
            out[k] = exact_orient(ax[k], ay[k], bx[k], by[k], cx[k], cy[k])
    return out
