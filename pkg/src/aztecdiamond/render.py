"""SVG drawing of a tiling with its row paths overlaid.

Output is assembled as text with integer coordinates only, so identical input
gives byte-identical files.
"""

from __future__ import annotations

from .aztec import HORIZONTAL, Tiling, row_y, trace_row

# Styling table.  Golden SVG tests depend on these values.
SCALE = 40
MARGIN = 10
FILL = {HORIZONTAL: "#f4d35e", "V": "#5fa8d3"}
DOMINO_STROKE = "#1b1b1b"
DOMINO_STROKE_WIDTH = 2
PATH_STROKE = "#c1121f"
PATH_STROKE_WIDTH = 4
PATH_DOT_RADIUS = 4


def _frame(n):
    side = 2 * (n + 1) * SCALE + 2 * MARGIN

    def to_svg(x2, y2):
        # arguments are doubled plane coordinates, so midpoints stay integral
        return MARGIN + (x2 + 2 * (n + 1)) * SCALE // 2, MARGIN + (2 * (n + 1) - y2) * SCALE // 2

    return side, to_svg


def tiling_svg(t: Tiling, overlay_paths: bool = False) -> str:
    t.validate()
    n = t.order
    side, to_svg = _frame(n)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" '
        f'viewBox="0 0 {side} {side}">',
        f'<rect x="0" y="0" width="{side}" height="{side}" fill="white"/>',
        '<g id="dominoes">',
    ]
    for d in t.sorted_dominoes():
        w, h = (2, 1) if d.o == HORIZONTAL else (1, 2)
        left, top = to_svg(2 * d.x, 2 * (d.y + h))
        out.append(
            f'<rect class="domino-{d.o}" x="{left}" y="{top}" width="{w * SCALE}" '
            f'height="{h * SCALE}" fill="{FILL[d.o]}" stroke="{DOMINO_STROKE}" '
            f'stroke-width="{DOMINO_STROKE_WIDTH}"/>'
        )
    out.append("</g>")
    if overlay_paths:
        out.append('<g id="paths">')
        owner = t.cell_owner()
        for i in range(1, n + 1):
            x, y = -i, row_y(n, i)
            pts = [(x, y)]
            for s in trace_row(t, i, owner):
                x += 2 if s == "L" else 1
                y += {"U": 1, "L": 0, "D": -1}[s]
                pts.append((x, y))
            svg_pts = [to_svg(2 * px, 2 * py + 1) for px, py in pts]
            coords = " ".join(f"{a},{b}" for a, b in svg_pts)
            out.append(
                f'<polyline class="path-{i}" points="{coords}" fill="none" '
                f'stroke="{PATH_STROKE}" stroke-width="{PATH_STROKE_WIDTH}" '
                f'stroke-linejoin="round"/>'
            )
            for a, b in svg_pts:
                out.append(f'<circle cx="{a}" cy="{b}" r="{PATH_DOT_RADIUS}" fill="{PATH_STROKE}"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
