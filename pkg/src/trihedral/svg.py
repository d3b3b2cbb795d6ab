"""Static SVG drawing of a junior-simplex triangulation.

Barycentric coordinates are projected onto an equilateral triangle with e1
bottom-left, e2 bottom-right and e3 on top.  Triangles fixed by the rotation
and the rotation-fixed vertex are drawn in a highlight colour.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .triangulation import Triangulation

SIDE = 600.0
MARGIN = 30.0
ORBIT_COLOURS = ("#dbe9f6", "#fde2c8", "#d9f0d3", "#eadcf0", "#fbe3e8", "#e0f3f1")


def _project(point, side=SIDE, margin=MARGIN) -> tuple[float, float]:
    height = side * math.sqrt(3) / 2
    corners = ((margin, margin + height), (margin + side, margin + height),
               (margin + side / 2, margin))
    p, q, s = point.numerators
    x = (p * corners[0][0] + q * corners[1][0] + s * corners[2][0]) / point.r
    y = (p * corners[0][1] + q * corners[1][1] + s * corners[2][1]) / point.r
    return x, y


def render_svg(tri: Triangulation, title: str | None = None) -> str:
    width = SIDE + 2 * MARGIN
    height = SIDE * math.sqrt(3) / 2 + 2 * MARGIN
    rho = tri.rotation_map()
    orbit_of = {t: k for k, orbit in enumerate(tri.orbits) for t in orbit}

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1f}" '
        f'height="{height:.1f}" viewBox="0 0 {width:.1f} {height:.1f}">'
    ]
    if title:
        lines.append(f"<title>{escape(title)}</title>")
    for i, t in enumerate(tri.triangles):
        pts = " ".join("%.3f,%.3f" % _project(tri.points[j]) for j in t)
        orbit = tri.orbits[orbit_of[i]] if tri.orbits else [i]
        if len(orbit) == 1:
            cls, fill = "face fixed", "#f4b942"
        else:
            cls, fill = "face", ORBIT_COLOURS[orbit_of.get(i, 0) % len(ORBIT_COLOURS)]
        lines.append(
            f'<polygon class="{cls}" points="{pts}" fill="{fill}" '
            f'stroke="#333" stroke-width="1"/>'
        )
    for i, p in enumerate(tri.points):
        x, y = _project(p)
        fixed = rho[i] == i
        cls = "vertex fixed" if fixed else "vertex"
        colour = "#c0392b" if fixed else "#222"
        radius = 5 if fixed else 3
        lines.append(
            f'<circle class="{cls}" cx="{x:.3f}" cy="{y:.3f}" r="{radius}" fill="{colour}">'
            f"<title>{p}</title></circle>"
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
