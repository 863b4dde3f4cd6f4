"""Curve-pattern view: score points against per-anchor turn-shaped models.

Each anchor contributes one evaluation element: its longest subsequence
through the anchor whose turn structure matches the requested pattern.
Points on the model fit perfectly; points off it are compared against the
model's linear interpolant at their position. Offsets are raw residuals;
similarities come from the angle, after range normalization, at the anchor
between the real point and its interpolated stand-in. Anchors with no
matching model contribute only their self term, so their weight bottoms
out at exactly 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np

from .core import ANY, MINUS, PLUS, TurnPattern, turn_structure, validate_series
from .errors import IndexOutOfRange, TooFewPoints
from .framework import RddReport, ordered_map_reduce, rdd_scores
from .lkts import SubsequenceResult, lkts_through

DEFAULT_BANDWIDTH = 50.0


@dataclass
class CurveContext:
    """One anchor's model and the interpolation data derived from it."""

    anchor: int
    model: Optional[SubsequenceResult]
    coef: float
    interpolants: Dict[int, float]


def resolve_model(values: np.ndarray, anchor: int, pattern: TurnPattern) -> Optional[SubsequenceResult]:
    """The anchor's longest subsequence matching the pattern, or None.

    A concrete sign must be realized exactly; "any" takes whichever sign
    admits the longer model, preferring "+" on ties.
    """
    if pattern.sign == ANY:
        plus = lkts_through(values, anchor, pattern.turns, sign=PLUS)
        minus = lkts_through(values, anchor, pattern.turns, sign=MINUS)
        if plus is None:
            return minus
        if minus is None or plus.length >= minus.length:
            return plus
        return minus
    return lkts_through(values, anchor, pattern.turns, sign=pattern.sign)


def _interpolate(values: np.ndarray, model: SubsequenceResult) -> np.ndarray:
    """Model value at every abscissa: piecewise linear, end slopes extended."""
    n = values.size
    mi = np.asarray(model.indices, dtype=float)
    mv = values[model.indices]
    xs = np.arange(n, dtype=float)
    v = np.interp(xs, mi, mv)
    lo, hi = model.indices[0], model.indices[-1]
    if lo > 0:
        slope = (mv[1] - mv[0]) / (mi[1] - mi[0])
        v[:lo] = mv[0] + slope * (xs[:lo] - mi[0])
    if hi < n - 1:
        slope = (mv[-1] - mv[-2]) / (mi[-1] - mi[-2])
        v[hi + 1:] = mv[-1] + slope * (xs[hi + 1:] - mi[-1])
    return v


def curve_context(s, pattern: TurnPattern, anchor: int) -> CurveContext:
    values = validate_series(s)
    span = float(values.max() - values.min())
    coef = span / values.size
    model = resolve_model(values, anchor, pattern) if span > 0 else None
    interpolants: Dict[int, float] = {}
    if model is not None:
        v = _interpolate(values, model)
        on_model = set(model.indices)
        interpolants = {k: float(v[k]) for k in range(values.size) if k not in on_model}
    return CurveContext(anchor=anchor, model=model, coef=coef, interpolants=interpolants)


def curve_sim_off(s, pattern: TurnPattern, anchor: int, bandwidth: float = DEFAULT_BANDWIDTH):
    """Similarity and offset of every point under one anchor's model.

    A constant series fits any pattern trivially: sim is all ones and off
    all zeros. An anchor with no matching model keeps only its self term.
    """
    values = validate_series(s)
    n = values.size
    if not 0 <= anchor < n:
        raise IndexOutOfRange(f"anchor {anchor} outside 0..{n - 1}")
    mn = float(values.min())
    mx = float(values.max())
    if mx == mn:
        return np.ones(n), np.zeros(n)
    model = resolve_model(values, anchor, pattern)
    if model is None:
        sim = np.zeros(n)
        sim[anchor] = 1.0
        return sim, np.zeros(n)
    v = _interpolate(values, model)
    off = np.abs(v - values)
    coef = (mx - mn) / n
    dn = (values - mn) / coef
    vn = (v - mn) / coef
    ux = np.arange(n, dtype=float) - anchor
    uy = dn - dn[anchor]
    wy = vn - dn[anchor]
    cross = np.abs(ux * (wy - uy))
    dot = ux * ux + uy * wy
    theta = np.degrees(np.arctan2(cross, dot))
    theta[values == v] = 0.0
    sim = np.exp(-(theta * theta) / bandwidth)
    sim[anchor] = 1.0
    return sim, off


class CurveView:
    """Anchor-per-element provider for the scoring framework."""

    def __init__(self, values: np.ndarray, pattern: TurnPattern, bandwidth: float):
        self.values = values
        self.pattern = pattern
        self.bandwidth = bandwidth

    def weighted_sums(self, workers: int = 1):
        def partial(a, b):
            n = self.values.size
            ssum = np.zeros(n)
            osum = np.zeros(n)
            wtot = 0.0
            for anchor in range(a, b):
                sim, off = curve_sim_off(self.values, self.pattern, anchor, self.bandwidth)
                w = sim.sum()
                ssum += w * sim
                osum += w * off
                wtot += w
            return ssum, osum, wtot

        return ordered_map_reduce(partial, self.values.size, workers, chunk=8)


def curve_rdd(s, pattern: TurnPattern, bandwidth: float = DEFAULT_BANDWIDTH, workers: int = 1) -> RddReport:
    """Score every point of the series against the anchored curve models."""
    values = validate_series(s)
    n = values.size
    if n < 3:
        raise TooFewPoints("curve view needs at least three points")
    if values.max() == values.min():
        return RddReport(np.zeros(n), np.ones(n), np.zeros(n), [])
    return rdd_scores(CurveView(values, pattern, bandwidth), workers)


def suggest_pattern(s) -> TurnPattern:
    """Hint a pattern from a median-of-three smoothed copy of the series.

    Purely advisory: smoothing suppresses single-point spikes so the turn
    census reflects the broad shape. Callers decide whether to use it.
    """
    values = validate_series(s)
    if values.size < 3:
        return TurnPattern(ANY, 0)
    smooth = values.copy()
    windows = np.lib.stride_tricks.sliding_window_view(values, 3)
    smooth[1:-1] = np.median(windows, axis=1)
    turns, sign, _ = turn_structure(smooth)
    return TurnPattern(sign if sign in (PLUS, MINUS) else ANY, turns)
