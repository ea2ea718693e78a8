"""Static SVG drawings: dots for points, polylines for edges, dashed hull."""
from __future__ import annotations

from pathlib import Path
from xml.sax.saxutils import escape

from .geometry import PointSet, Structure, convex_hull

SIZE = 512.0
MARGIN = 16.0
DOT_R = 2.0


def _frame(s: PointSet):
    x0, y0 = float(s.xs.min()), float(s.ys.min())
    span = max(float(s.xs.max()) - x0, float(s.ys.max()) - y0) or 1.0
    k = (SIZE - 2 * MARGIN) / span

    def tr(i):
        # flip y so the picture is not upside down
        return MARGIN + (s.xs[i] - x0) * k, SIZE - MARGIN - (s.ys[i] - y0) * k

    return tr


def _pts(tr, idx):
    return " ".join("%.3f,%.3f" % tr(i) for i in idx)


def render(s: PointSet, st: Structure | None = None, title: str = "") -> str:
    tr = _frame(s)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE:g}" height="{SIZE:g}" '
        f'viewBox="0 0 {SIZE:g} {SIZE:g}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    hull = list(convex_hull(s).hull)
    out.append(f'<polygon points="{_pts(tr, hull)}" fill="none" stroke="#999" '
               'stroke-width="1" stroke-dasharray="4 3"/>')
    if st is not None:
        if st.order is not None:
            order = list(st.order)
            if st.kind.value == "CYCLE":
                order.append(order[0])
            out.append(f'<polyline points="{_pts(tr, order)}" fill="none" stroke="#1f4e9c" stroke-width="1.2"/>')
        else:
            for u, v in st.edges:
                out.append(f'<polyline points="{_pts(tr, (u, v))}" fill="none" stroke="#1f4e9c" stroke-width="1.2"/>')
    for i in range(s.n):
        x, y = tr(i)
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{DOT_R:g}" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(path, s: PointSet, st: Structure | None = None, title: str = "") -> None:
    Path(path).write_text(render(s, st, title), encoding="utf-8")
