"""Static SVG 1.1 figures: integer grid, filled polygons, outer-normal arrows."""

from __future__ import annotations

import math
from typing import Optional, Sequence
from xml.sax.saxutils import escape

from .exactgeom import LatticePolygon

PALETTE = ("#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1", "#76b7b2")


def render_svg(polygons: Sequence[LatticePolygon], labels: Optional[Sequence[str]] = None,
               normals: bool = True, cell: int = 24) -> str:
    if not polygons:
        raise ValueError("nothing to draw")
    labels = list(labels) if labels is not None else [f"P{i}" for i in range(1, len(polygons) + 1)]
    xs = [x for P in polygons for x, _ in P.vertices]
    ys = [y for P in polygons for _, y in P.vertices]
    x0, x1, y0, y1 = min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1
    W, H = (x1 - x0) * cell, (y1 - y0) * cell

    def sx(x):
        return (x - x0) * cell

    def sy(y):
        return (y1 - y) * cell

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{W}" height="{H + cell}" '
           f'viewBox="0 0 {W} {H + cell}">',
           '<defs><marker id="arrow" markerWidth="8" markerHeight="8" refX="6" refY="3" orient="auto">'
           '<path d="M0,0 L6,3 L0,6 z" fill="#333"/></marker></defs>',
           '<g stroke="#ddd" stroke-width="1">']
    for x in range(x0, x1 + 1):
        out.append(f'<line x1="{sx(x)}" y1="0" x2="{sx(x)}" y2="{H}"/>')
    for y in range(y0, y1 + 1):
        out.append(f'<line x1="0" y1="{sy(y)}" x2="{W}" y2="{sy(y)}"/>')
    out.append("</g>")
    if x0 <= 0 <= x1 and y0 <= 0 <= y1:
        out.append(f'<circle cx="{sx(0)}" cy="{sy(0)}" r="3" fill="#000"/>')
    for k, P in enumerate(polygons):
        color = PALETTE[k % len(PALETTE)]
        pts = " ".join(f"{sx(x)},{sy(y)}" for x, y in P.vertices)
        if P.is_point:
            (x, y), = P.vertices
            out.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="5" fill="{color}"/>')
        elif P.is_segment:
            out.append(f'<polyline points="{pts}" stroke="{color}" stroke-width="3" fill="none"/>')
        else:
            out.append(f'<polygon points="{pts}" fill="{color}" fill-opacity="0.35" '
                       f'stroke="{color}" stroke-width="2"/>')
        if normals and not P.is_point:
            vs = P.vertices
            for i, (ex, ey) in enumerate(P.edges()):
                (ax, ay) = vs[i]
                mx, my = ax + ex / 2, ay + ey / 2
                g = math.gcd(ex, ey)
                nx, ny = ey / g, -ex / g
                s = 0.8 / math.hypot(nx, ny)
                out.append(f'<line x1="{sx(mx):.2f}" y1="{sy(my):.2f}" x2="{sx(mx + s * nx):.2f}" '
                           f'y2="{sy(my + s * ny):.2f}" stroke="#333" stroke-width="1.2" '
                           f'marker-end="url(#arrow)"/>')
        lx, ly = P.vertices[0]
        out.append(f'<text x="{sx(lx) + 4}" y="{sy(ly) - 4}" font-family="sans-serif" '
                   f'font-size="12" fill="{color}">{escape(labels[k])}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
