"""SVG pictures of convex and rectilinear drawings, with optional highlighted edges."""

from __future__ import annotations

import math
from typing import Iterable, Sequence
from xml.sax.saxutils import escape

from .convex import ConvexDrawing, norm_edge
from .hypercube import label
from .nonconvex import RectilinearDrawing

SIZE = 600
MARGIN = 60


def _positions(D) -> dict[int, tuple[float, float]]:
    if isinstance(D, ConvexDrawing):
        c, r = SIZE / 2, SIZE / 2 - MARGIN
        # slot 0 at the top, clockwise on screen (y grows downward)
        return {
            v: (c + r * math.sin(2 * math.pi * p / D.n), c - r * math.cos(2 * math.pi * p / D.n))
            for p, v in enumerate(D.order)
        }
    if isinstance(D, RectilinearDrawing):
        xs = [p[0] for p in D.coords.values()]
        ys = [p[1] for p in D.coords.values()]
        span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
        scale = (SIZE - 2 * MARGIN) / span
        return {v: (MARGIN + (x - min(xs)) * scale, MARGIN + (y - min(ys)) * scale) for v, (x, y) in D.coords.items()}
    raise TypeError("only convex and rectilinear drawings have geometry")


def render_svg(D, highlight: Iterable[Sequence[int]] = (), labels: bool = True) -> str:
    pos = _positions(D)
    marked = {norm_edge(*e) for e in highlight}
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    if isinstance(D, ConvexDrawing):
        r = SIZE / 2 - MARGIN
        out.append(f'<circle cx="{SIZE / 2}" cy="{SIZE / 2}" r="{r}" fill="none" stroke="#bbb" stroke-dasharray="3,3"/>')
    for e in D.edges:
        if e in marked:
            continue
        (x1, y1), (x2, y2) = pos[e[0]], pos[e[1]]
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="#999" stroke-width="0.8"/>')
    for e in sorted(marked):
        (x1, y1), (x2, y2) = pos[e[0]], pos[e[1]]
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="#d62728" stroke-width="3"/>')
    for v, (x, y) in sorted(pos.items()):
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="black"/>')
        if labels:
            name = label(v, D.d) if D.d else str(v)
            # push labels outward from the centre
            dx, dy = x - SIZE / 2, y - SIZE / 2
            norm = math.hypot(dx, dy) or 1
            lx, ly = x + 22 * dx / norm, y + 22 * dy / norm
            out.append(
                f'<text x="{lx:.2f}" y="{ly:.2f}" font-family="monospace" font-size="11" '
                f'text-anchor="middle" dominant-baseline="middle">{escape(name)}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
