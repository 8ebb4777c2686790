"""SVG drawing of arc diagrams.  Display only; nothing here feeds back into computation.

Nodes sit at unit spacing on a horizontal baseline.  An arc is a smooth
curve through control points that pass a fixed distance above (``o``) or
below (``u``) each interior node; later arcs are drawn on top.
"""

from __future__ import annotations

from typing import List, Tuple

from .diagrams import ArcDiagram

UNIT = 60.0
MARGIN = 40.0
NODE_R = 4.0
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2")


def _points(g, base: float, lift: float) -> List[Tuple[float, float]]:
    pts = [(MARGIN + g.left * UNIT, base)]
    for k, c in zip(range(g.left + 1, g.right), g.pattern):
        dy = -lift if c == "o" else lift
        pts.append((MARGIN + k * UNIT, base + dy))
    pts.append((MARGIN + g.right * UNIT, base))
    return pts


def _smooth_path(pts: List[Tuple[float, float]], bulge: float) -> str:
    if len(pts) == 2:
        (x0, y0), (x1, y1) = pts
        mx = (x0 + x1) / 2
        return f"M {x0:.1f} {y0:.1f} Q {mx:.1f} {y0 - bulge:.1f} {x1:.1f} {y1:.1f}"
    # Catmull-Rom through the points, converted to cubic Bezier segments
    ext = [pts[0]] + pts + [pts[-1]]
    out = [f"M {pts[0][0]:.1f} {pts[0][1]:.1f}"]
    for i in range(1, len(ext) - 2):
        p0, p1, p2, p3 = ext[i - 1], ext[i], ext[i + 1], ext[i + 2]
        c1 = (p1[0] + (p2[0] - p0[0]) / 6, p1[1] + (p2[1] - p0[1]) / 6)
        c2 = (p2[0] - (p3[0] - p1[0]) / 6, p2[1] - (p3[1] - p1[1]) / 6)
        out.append(f"C {c1[0]:.1f} {c1[1]:.1f} {c2[0]:.1f} {c2[1]:.1f} {p2[0]:.1f} {p2[1]:.1f}")
    return " ".join(out)


def render_svg(d: ArcDiagram) -> str:
    n = d.n
    k = len(d.arcs)
    width = 2 * MARGIN + n * UNIT
    height = 2 * MARGIN + 2 * UNIT
    base = MARGIN + UNIT
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
        f'<line x1="{MARGIN:.1f}" y1="{base:.1f}" x2="{MARGIN + n * UNIT:.1f}" y2="{base:.1f}" '
        'stroke="#ddd" stroke-width="1"/>',
    ]
    # earliest first so that later arcs end up on top
    for pos in range(k - 1, -1, -1):
        g = d.arcs[pos]
        label = k - pos
        lift = UNIT * (0.2 + 0.5 * (g.right - g.left) / max(n, 1))
        path = _smooth_path(_points(g, base, lift), lift)
        colour = PALETTE[(label - 1) % len(PALETTE)]
        parts.append(f'<path d="{path}" fill="none" stroke="{colour}" stroke-width="2">'
                     f"<title>gamma_{label} = {g}</title></path>")
    for v in range(n + 1):
        x = MARGIN + v * UNIT
        parts.append(f'<circle cx="{x:.1f}" cy="{base:.1f}" r="{NODE_R}" fill="black"/>')
        parts.append(f'<text x="{x:.1f}" y="{height - MARGIN / 3:.1f}" font-size="12" '
                     f'text-anchor="middle">{v}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
