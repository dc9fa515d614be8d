"""Static SVG drawings of scenes."""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .geometry import HalfPlane, Scene, clip_polygon, mul

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf")


def _bbox(scene: Scene, margin: Fraction):
    xs, ys = [], []
    for o in scene.objects:
        if o.kind in ("translate", "homothet"):
            for v in scene.body_of(o).placed(o.shape.center, o.shape.scale):
                xs.append(v[0])
                ys.append(v[1])
        elif o.kind == "rect":
            xs += [o.shape.x_lo, o.shape.x_hi]
            ys += [o.shape.y_lo, o.shape.y_hi]
        else:
            for p in (o.shape.a, o.shape.b):
                xs.append(p[0])
                ys.append(p[1])
    if not xs:
        return Fraction(-1), Fraction(-1), Fraction(1), Fraction(1)
    return min(xs) - margin, min(ys) - margin, max(xs) + margin, max(ys) + margin


def _halfplane_polygon(h: HalfPlane, box):
    x0, y0, x1, y1 = box
    poly = ((x0, y0), (x1, y0), (x1, y1), (x0, y1))
    # clip to inward_normal . x >= offset, i.e. -n . x <= -offset
    return clip_polygon(poly, mul(h.inward_normal, -1), -h.offset)


def render_svg(scene: Scene, width: int = 640, view=None) -> str:
    margin = Fraction(1, 2)
    box = view or _bbox(scene, margin)
    x0, y0, x1, y1 = (Fraction(v) for v in box)
    span = max(x1 - x0, y1 - y0) or Fraction(1)
    k = Fraction(width) / span
    height = int((y1 - y0) * k) + 1

    def tx(p):
        return f"{float((p[0] - x0) * k):.3f},{float((y1 - p[1]) * k):.3f}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for idx, o in enumerate(scene.objects):
        color = PALETTE[idx % len(PALETTE)]
        if o.kind in ("translate", "homothet"):
            poly = scene.body_of(o).placed(o.shape.center, o.shape.scale)
        elif o.kind == "rect":
            poly = o.shape.polygon()
        else:
            poly = _halfplane_polygon(o.shape, (x0, y0, x1, y1))
        if not poly:
            continue
        pts = " ".join(tx(p) for p in poly)
        title = f"<title>{escape(o.label)}</title>" if o.label else ""
        out.append(
            f'<polygon points="{pts}" fill="{color}" fill-opacity="0.15" stroke="{color}" stroke-width="1">{title}</polygon>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
