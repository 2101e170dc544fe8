"""Plain SVG drawings of planar bodies."""

from xml.sax.saxutils import escape

import numpy as np

from .errors import DomainError

__all__ = ["PALETTE", "VIEWPORT", "render_svg", "write_svg"]

VIEWPORT = 800
MARGIN = 0.1
PALETTE = (
    ("#1f77b4", ""),
    ("#d62728", ""),
    ("#2ca02c", "8 4"),
    ("#9467bd", "2 3"),
    ("#ff7f0e", "12 4 2 4"),
    ("#17becf", "4 4"),
)


def _world_window(bodies):
    pts = np.vstack([b.vertices for b in bodies] + [np.zeros((1, 2))])
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    span = float(max(hi - lo)) or 1.0
    mid = (lo + hi) / 2
    half = span * (0.5 + MARGIN)
    return mid, half


def render_svg(bodies, labels=None, fill=False):
    """SVG 1.1 text showing each polygon as a closed stroke, plus the origin."""
    bodies = list(bodies)
    if not bodies:
        raise DomainError("nothing to plot")
    for b in bodies:
        if b.vertices.shape[1] != 2:
            raise DomainError("only planar bodies can be plotted")
    labels = list(labels) if labels is not None else [None] * len(bodies)
    if len(labels) != len(bodies):
        raise DomainError("need one label per body")
    mid, half = _world_window(bodies)
    k = VIEWPORT / (2 * half)

    def to_screen(p):
        x = (p[..., 0] - mid[0] + half) * k
        y = (half - (p[..., 1] - mid[1])) * k
        return np.stack([x, y], axis=-1)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{VIEWPORT}" '
        f'height="{VIEWPORT}" viewBox="0 0 {VIEWPORT} {VIEWPORT}">',
        f'<rect x="0" y="0" width="{VIEWPORT}" height="{VIEWPORT}" fill="white"/>',
    ]
    for i, (body, label) in enumerate(zip(bodies, labels)):
        color, dash = PALETTE[i % len(PALETTE)]
        pts = to_screen(body.vertices)
        coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in pts)
        style = f'stroke="{color}" stroke-width="2" fill="{color if fill else "none"}"'
        if fill:
            style += ' fill-opacity="0.15"'
        if dash:
            style += f' stroke-dasharray="{dash}"'
        out.append(f'<polygon points="{coords}" {style}/>')
        if label:
            x, y = to_screen(body.vertices[np.argmax(body.vertices[:, 1])])
            out.append(f'<text x="{x + 6:.3f}" y="{y - 6:.3f}" font-family="sans-serif" '
                       f'font-size="16" fill="{color}">{escape(str(label))}</text>')
    ox, oy = to_screen(np.zeros(2))
    out.append(f'<circle cx="{ox:.3f}" cy="{oy:.3f}" r="3" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(path, bodies, labels=None, fill=False):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(bodies, labels, fill))
