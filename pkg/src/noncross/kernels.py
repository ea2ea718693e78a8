"""Backend selection for the hot loops.

The compiled extension is used when it imports; setting
``NONCROSS_PURE_PYTHON=1`` forces the pure-Python twin.
"""
import os

from . import _pykernels

if os.environ.get("NONCROSS_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND

convex_hull = _impl.convex_hull
segment_crossings = _impl.segment_crossings
first_crossing = _impl.first_crossing
halving_pairs = _impl.halving_pairs
bridge = _impl.bridge
top_bridge_order = _impl.top_bridge_order
two_endpoint_order = _impl.two_endpoint_order
visible_edges = _impl.visible_edges
first_visible_edge = _impl.first_visible_edge
brute_path = _impl.brute_path
brute_cycle = _impl.brute_cycle
brute_tree = _impl.brute_tree
prim_max_tree = _impl.prim_max_tree
collinear_triple = _impl.collinear_triple


def backends():
    """Both implementations available in this install, python first."""
    out = [_pykernels]
    try:
        from . import _kernels
        out.append(_kernels)
    except ImportError:
        pass
    return out
