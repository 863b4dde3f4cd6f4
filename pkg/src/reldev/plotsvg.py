"""Minimal deterministic SVG rendering of a series and its detections.

No plotting dependency: the chart is a polyline with point glyphs, flagged
points drawn as larger highlighted circles, and an optional score bar
strip along the bottom. All coordinates are formatted with a fixed number
of decimals so identical input always yields byte-identical files.
"""

from __future__ import annotations

import numpy as np

from .errors import IoError

_W, _H = 800.0, 420.0
_PAD = 40.0
_BAR_STRIP = 90.0  # height reserved for score bars when present


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _scale(values: np.ndarray, lo: float, hi: float):
    vmin = float(values.min())
    vmax = float(values.max())
    span = vmax - vmin if vmax > vmin else 1.0

    def to_px(v):
        return hi - (float(v) - vmin) / span * (hi - lo)

    return to_px


def render_svg(values, outliers=(), rdd=None) -> str:
    """Build the SVG text for a series, flagged indices, and optional scores."""
    v = np.asarray(values, dtype=float)
    n = v.size
    flagged = set(int(i) for i in outliers)
    has_bars = rdd is not None and len(rdd) == n
    chart_bottom = _H - _PAD - (_BAR_STRIP if has_bars else 0.0)

    def x_px(i):
        if n == 1:
            return _W / 2
        return _PAD + i * (_W - 2 * _PAD) / (n - 1)

    y_px = _scale(v, _PAD, chart_bottom)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(_W)}" height="{_fmt(_H)}" '
        f'viewBox="0 0 {_fmt(_W)} {_fmt(_H)}">',
        f'<rect width="{_fmt(_W)}" height="{_fmt(_H)}" fill="white"/>',
    ]
    if n > 1:
        points = " ".join(f"{_fmt(x_px(i))},{_fmt(y_px(v[i]))}" for i in range(n))
        parts.append(f'<polyline points="{points}" fill="none" stroke="#4477aa" stroke-width="1.5"/>')
    for i in range(n):
        cx, cy = _fmt(x_px(i)), _fmt(y_px(v[i]))
        if i in flagged:
            parts.append(f'<circle cx="{cx}" cy="{cy}" r="5" fill="#cc3311" stroke="black" stroke-width="0.8"/>')
        else:
            parts.append(f'<circle cx="{cx}" cy="{cy}" r="2.5" fill="#4477aa"/>')
    if has_bars:
        scores = np.asarray(rdd, dtype=float)
        top = float(scores.max())
        base = _H - _PAD
        height = _BAR_STRIP - 10.0
        width = max((_W - 2 * _PAD) / max(n, 1) * 0.6, 1.0)
        for i in range(n):
            frac = 0.0 if top <= 0 else max(float(scores[i]), 0.0) / top
            h = frac * height
            x0 = x_px(i) - width / 2
            color = "#cc3311" if i in flagged else "#999999"
            parts.append(
                f'<rect x="{_fmt(x0)}" y="{_fmt(base - h)}" width="{_fmt(width)}" '
                f'height="{_fmt(h)}" fill="{color}" fill-opacity="0.7"/>'
            )
        parts.append(
            f'<line x1="{_fmt(_PAD)}" y1="{_fmt(base)}" x2="{_fmt(_W - _PAD)}" y2="{_fmt(base)}" '
            'stroke="#333333" stroke-width="0.8"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_plot(s, result, path) -> None:
    """Write the detection chart for series s to path as standalone SVG."""
    outliers = getattr(result, "outliers", ()) if result is not None else ()
    rdd_report = getattr(result, "rdd", None) if result is not None else None
    scores = getattr(rdd_report, "rdd", None) if rdd_report is not None else None
    text = render_svg(s, outliers, scores)
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc
