"""Static SVG rendering of patches, one path per hat."""

from __future__ import annotations

from .geometry import boundary_polygon
from .tiler import Patch

CHIRALITY_FILLS = {False: "#f2f2ee", True: "#2f5d9e"}
RING_PALETTE = ("#1b1b1b", "#e4572e", "#f3a712", "#a8c686", "#669bbc", "#8e6c8a", "#c9cba3")
STROKE = "#222222"
MARGIN = 2.0


def _fmt(x: float) -> str:
    s = f"{x:.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(patch: Patch, color_by: str = "chirality", scale: float = 10.0) -> str:
    if color_by not in ("chirality", "ring"):
        raise ValueError("color_by must be 'chirality' or 'ring'")
    outlines = []
    for i in range(len(patch)):
        # SVG y axis points down
        pts = [(x, -y) for x, y in (p.to_float() for p in boundary_polygon(patch.kites_of(i)))]
        outlines.append(pts)
    xs = [x for pts in outlines for x, _ in pts]
    ys = [y for pts in outlines for _, y in pts]
    x0, y0 = min(xs) - MARGIN, min(ys) - MARGIN
    w, h = max(xs) - min(xs) + 2 * MARGIN, max(ys) - min(ys) + 2 * MARGIN
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}" '
        f'width="{_fmt(w * scale)}" height="{_fmt(h * scale)}">',
        f'<g stroke="{STROKE}" stroke-width="0.12" stroke-linejoin="round">',
    ]
    for i, pts in enumerate(outlines):
        mirror = patch.placements[i].iso.mirror
        corona = patch.corona_of[i]
        fill = CHIRALITY_FILLS[mirror] if color_by == "chirality" else RING_PALETTE[corona % len(RING_PALETTE)]
        d = "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in pts) + " Z"
        out.append(
            f'<path d="{d}" fill="{fill}" data-corona="{corona}" '
            f'data-chirality="{"reflected" if mirror else "normal"}"/>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
