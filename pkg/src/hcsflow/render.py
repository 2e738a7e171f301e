"""Deterministic SVG overlays of closed curves."""
from __future__ import annotations

import numpy as np

from .geom import Polyline
from .pcurve import PCurve

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
           "#bcbd22", "#17becf"]


def _real(curve) -> np.ndarray:
    if isinstance(curve, PCurve):
        return curve.real_points()
    if isinstance(curve, Polyline):
        return curve.as_array()
    return np.asarray([[float(x), float(y)] for x, y in curve], dtype=float).reshape(-1, 2)


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")


def svg_text(curves, labels=None, colors=None, size=600, margin=20, stroke=1.0) -> str:
    """SVG document with one closed path per curve and a legend (y axis up)."""
    arrs = [_real(c) for c in curves]
    labels = list(labels) if labels is not None else [f"curve {i}" for i in range(len(arrs))]
    if len(labels) != len(arrs):
        raise ValueError("one label per curve")
    colors = list(colors) if colors is not None else [PALETTE[i % len(PALETTE)] for i in range(len(arrs))]
    legend_h = 16 * len(arrs) + (8 if arrs else 0)
    W, H = size, size + legend_h
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">',
           f'<rect width="{W}" height="{H}" fill="white"/>']
    nonempty = [a for a in arrs if len(a)]
    if nonempty:
        allp = np.vstack(nonempty)
        lo, hi = allp.min(axis=0), allp.max(axis=0)
        span = float(max(hi[0] - lo[0], hi[1] - lo[1])) or 1.0
        k = (size - 2 * margin) / span
        for a, col in zip(arrs, colors):
            if not len(a):
                continue
            xs = margin + (a[:, 0] - lo[0]) * k
            ys = size - margin - (a[:, 1] - lo[1]) * k
            if len(a) == 1:
                out.append(f'<circle cx="{xs[0]:.3f}" cy="{ys[0]:.3f}" r="2" fill="{col}"/>')
                continue
            d = "M" + " L".join(f"{x:.3f},{y:.3f}" for x, y in zip(xs, ys)) + " Z"
            out.append(f'<path d="{d}" fill="none" stroke="{col}" stroke-width="{stroke}"/>')
    for i, (lab, col) in enumerate(zip(labels, colors)):
        y = size + 12 + 16 * i
        out.append(f'<line x1="{margin}" y1="{y - 4}" x2="{margin + 20}" y2="{y - 4}" stroke="{col}" stroke-width="2"/>')
        out.append(f'<text x="{margin + 26}" y="{y}" font-family="sans-serif" font-size="12">{_esc(str(lab))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(curves, path, labels=None, colors=None, size=600):
    text = svg_text(curves, labels, colors, size)
    with open(path, "w") as fh:
        fh.write(text)
    return path
