"""Minimal SVG 1.1 emission for curves in the complex plane."""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

import numpy as np

from .errors import ParamError

__all__ = ["PlotSpec", "emit_svg"]

MARGIN = 0.05
_COLORS = ("#1f4e9c", "#c0392b", "#2e8b57", "#7d3c98")
_EMPTY_BOX = (-1.0, -1.0, 1.0, 1.0)


@dataclass(frozen=True)
class PlotSpec:
    """Curves (label, complex points) with a viewBox in plane coordinates.

    ``view_box`` is ``(xmin, ymin, xmax, ymax)`` and must contain every point
    with at least 5% margin on each side.
    """

    curves: tuple
    view_box: tuple
    stroke_width_px: float = 1.5
    width: int = 640
    height: int = 480

    def __post_init__(self):
        curves = tuple((str(label), np.asarray(pts, dtype=np.complex128).ravel()) for label, pts in self.curves)
        object.__setattr__(self, "curves", curves)
        xmin, ymin, xmax, ymax = self.view_box
        if not (xmax > xmin and ymax > ymin):
            raise ParamError("empty viewBox")
        pts = np.concatenate([c for _, c in curves]) if curves else np.zeros(0, complex)
        if pts.size:
            mx = MARGIN * (xmax - xmin) * (1 - 1e-9)
            my = MARGIN * (ymax - ymin) * (1 - 1e-9)
            if (
                pts.real.min() < xmin + mx
                or pts.real.max() > xmax - mx
                or pts.imag.min() < ymin + my
                or pts.imag.max() > ymax - my
            ):
                raise ParamError("viewBox must contain all points with a 5% margin")

    @classmethod
    def fit(cls, curves, width: int = 640, height: int = 480, stroke_width_px: float = 1.5) -> PlotSpec:
        """Smallest equal-aspect viewBox holding ``curves`` with the required margin."""
        curves = tuple((label, np.asarray(pts, dtype=np.complex128).ravel()) for label, pts in curves)
        pts = np.concatenate([c for _, c in curves]) if curves else np.zeros(0, complex)
        if pts.size == 0:
            return cls(curves, _EMPTY_BOX, stroke_width_px, width, height)
        x0, x1 = float(pts.real.min()), float(pts.real.max())
        y0, y1 = float(pts.imag.min()), float(pts.imag.max())
        # data occupies the central 80% of each axis, comfortably above the 5% rule
        sx = max(x1 - x0, 1e-12) / 0.8
        sy = max(y1 - y0, 1e-12) / 0.8
        scale = max(sx / width, sy / height)
        sx, sy = scale * width, scale * height
        cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
        box = (cx - sx / 2, cy - sy / 2, cx + sx / 2, cy + sy / 2)
        return cls(curves, box, stroke_width_px, width, height)


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def emit_svg(spec: PlotSpec) -> str:
    """Standalone SVG text; identical input gives byte-identical output."""
    xmin, ymin, xmax, ymax = spec.view_box
    W, H = spec.width, spec.height

    def px(x):
        return (x - xmin) / (xmax - xmin) * W

    def py(y):
        return (ymax - y) / (ymax - ymin) * H

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{W}" height="{H}" viewBox="0 0 {W} {H}">',
    ]
    axis = 'stroke="#999999" stroke-width="0.75"'
    if ymin <= 0 <= ymax:
        out.append(f'<line x1="0.000" y1="{_fmt(py(0))}" x2="{_fmt(W)}" y2="{_fmt(py(0))}" {axis}/>')
    if xmin <= 0 <= xmax:
        out.append(f'<line x1="{_fmt(px(0))}" y1="0.000" x2="{_fmt(px(0))}" y2="{_fmt(H)}" {axis}/>')
    for i, (label, pts) in enumerate(spec.curves):
        color = _COLORS[i % len(_COLORS)]
        coords = " ".join(f"{_fmt(px(p.real))},{_fmt(py(p.imag))}" for p in pts)
        out.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="{_fmt(spec.stroke_width_px)}" points="{coords}"/>'
        )
        out.append(
            f'<text x="10.000" y="{_fmt(20 + 16 * i)}" font-family="sans-serif" font-size="12" '
            f'fill="{color}">{escape(label)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
