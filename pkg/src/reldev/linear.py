"""Straight-line pattern view over index/value points.

Every ordered index pair (i, j) spans a candidate line through p_i = (i, d_i)
and p_j = (j, d_j) and forms one evaluation element. Under element (i, j),
point k is compared against the line's prediction q = (k, L(k)): similarity
is exp(-theta^2 / bandwidth) with theta the angle (degrees) at vertex p_i
between the rays toward p_k and toward q, and offset is the distance from
p_k to the line (perpendicular by default, vertical residual optionally).

An element's weight is X_i * Y_j, where X_i totals the similarity mass that
lines anchored at i hand out and Y_j totals the mass handed to lines ending
at j, so pairs of well-supported points dominate the averages.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import NUMBA_ENABLED, maybe_jit
from .core import validate_series
from .errors import TooFewPoints, ZeroRay
from .framework import RddReport, ordered_map_reduce, rdd_from_sums

DEFAULT_BANDWIDTH = 50.0

OFFSET_PERPENDICULAR = "perpendicular"
OFFSET_VERTICAL = "vertical"


def angle_degrees(vertex, a, b) -> float:
    """Interior angle at `vertex` between rays toward points a and b, in degrees."""
    ux, uy = a[0] - vertex[0], a[1] - vertex[1]
    wx, wy = b[0] - vertex[0], b[1] - vertex[1]
    if (ux == 0 and uy == 0) or (wx == 0 and wy == 0):
        raise ZeroRay("ray endpoint coincides with the vertex")
    cross = abs(ux * wy - uy * wx)
    dot = ux * wx + uy * wy
    return math.degrees(math.atan2(cross, dot))


def linear_sim_off(s, k, i, j, bandwidth=DEFAULT_BANDWIDTH, offset=OFFSET_PERPENDICULAR):
    """Similarity and offset of point k under the pair element (i, j)."""
    d = np.asarray(s, dtype=float)
    if i == j:
        raise ValueError("pair element needs two distinct indices")
    slope = (d[j] - d[i]) / (j - i)
    predicted = d[i] + slope * (k - i)
    residual = d[k] - predicted
    if k == i or residual == 0:
        theta = 0.0
    else:
        theta = angle_degrees((i, d[i]), (k, d[k]), (k, predicted))
    sim = math.exp(-theta * theta / bandwidth)
    if offset == OFFSET_VERTICAL:
        off = abs(residual)
    else:
        off = abs(residual) / math.sqrt(1.0 + slope * slope)
    return sim, off


@dataclass
class PairWeights:
    """Row and column similarity masses; element (i, j) weighs X[i] * Y[j]."""

    X: np.ndarray
    Y: np.ndarray

    def weight(self, i, j) -> float:
        return float(self.X[i] * self.Y[j])

    @property
    def total(self) -> float:
        # sum over ordered pairs with i != j of X_i * Y_j
        return float(self.X.sum() * self.Y.sum() - (self.X * self.Y).sum())


# --- kernels -----------------------------------------------------------
# The flattened ordered-pair index p in [0, n*(n-1)) decodes to
# i = p // (n-1) and j = remainder skipping the diagonal.


def _pair_sims_range(d, bandwidth, lo, hi, a_flat):
    n = d.size
    for p in range(lo, hi):
        i = p // (n - 1)
        r = p - i * (n - 1)
        j = r + 1 if r >= i else r
        slope = (d[j] - d[i]) / (j - i)
        acc = 0.0
        for k in range(n):
            if k == i:
                acc += 1.0
                continue
            dx = float(k - i)
            uy = d[k] - d[i]
            wy = slope * dx
            cross = abs(dx * (wy - uy))
            dot = dx * dx + uy * wy
            theta = math.degrees(math.atan2(cross, dot))
            acc += math.exp(-theta * theta / bandwidth)
        a_flat[p] = acc


def _pair_accum_range(d, bandwidth, vertical, X, Y, lo, hi):
    n = d.size
    ssum = np.zeros(n)
    osum = np.zeros(n)
    for p in range(lo, hi):
        i = p // (n - 1)
        r = p - i * (n - 1)
        j = r + 1 if r >= i else r
        w = X[i] * Y[j]
        slope = (d[j] - d[i]) / (j - i)
        den = math.sqrt(1.0 + slope * slope)
        for k in range(n):
            if k == i:
                ssum[k] += w
                continue
            dx = float(k - i)
            uy = d[k] - d[i]
            wy = slope * dx
            cross = abs(dx * (wy - uy))
            dot = dx * dx + uy * wy
            theta = math.degrees(math.atan2(cross, dot))
            resid = abs(uy - wy)
            off = resid if vertical else resid / den
            ssum[k] += math.exp(-theta * theta / bandwidth) * w
            osum[k] += off * w
    return ssum, osum


if NUMBA_ENABLED:
    _pair_sims_range = maybe_jit(_pair_sims_range)
    _pair_accum_range = maybe_jit(_pair_accum_range)
else:
    # Vectorized fallbacks: for each anchor row i, evaluate every line (i, j)
    # against every point k in one (n, n) sweep.

    def _row_geometry(d, i, bandwidth):
        n = d.size
        idx = np.arange(n, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            slope = (d - d[i]) / (idx - i)
        slope[i] = 0.0
        dx = idx - i
        uy = d - d[i]
        wy = slope[:, None] * dx[None, :]
        cross = np.abs(dx[None, :] * (wy - uy[None, :]))
        dot = dx[None, :] ** 2 + uy[None, :] * wy
        theta = np.degrees(np.arctan2(cross, dot))
        sim = np.exp(-(theta * theta) / bandwidth)
        resid = np.abs(uy[None, :] - wy)
        return slope, sim, resid

    def _pair_sims_rows(d, bandwidth, lo, hi, a_matrix):
        for i in range(lo, hi):
            _, sim, _ = _row_geometry(d, i, bandwidth)
            row = sim.sum(axis=1)
            row[i] = 0.0
            a_matrix[i] = row

    def _pair_accum_rows(d, bandwidth, vertical, X, Y, lo, hi):
        n = d.size
        ssum = np.zeros(n)
        osum = np.zeros(n)
        for i in range(lo, hi):
            slope, sim, resid = _row_geometry(d, i, bandwidth)
            if not vertical:
                resid = resid / np.sqrt(1.0 + slope * slope)[:, None]
            w = X[i] * Y
            w[i] = 0.0
            ssum += w @ sim
            osum += w @ resid
        return ssum, osum


def linear_pair_weights(s, bandwidth=DEFAULT_BANDWIDTH, workers=1) -> PairWeights:
    """Accumulate per-pair similarity masses into the X/Y weight vectors."""
    d = validate_series(s)
    n = d.size
    if n < 3:
        raise TooFewPoints("line view needs at least three points")
    if bandwidth <= 0:
        raise ValueError("bandwidth must be positive")
    if NUMBA_ENABLED:
        a_flat = np.zeros(n * (n - 1))

        def fill(lo, hi):
            _pair_sims_range(d, float(bandwidth), lo, hi, a_flat)
            return (0,)

        ordered_map_reduce(fill, n * (n - 1), workers, chunk=4096)
        A = np.zeros((n, n))
        mask = ~np.eye(n, dtype=bool)
        A[mask] = a_flat
    else:
        A = np.zeros((n, n))

        def fill(lo, hi):
            _pair_sims_rows(d, float(bandwidth), lo, hi, A)
            return (0,)

        ordered_map_reduce(fill, n, workers, chunk=16)
    return PairWeights(X=A.sum(axis=1), Y=A.sum(axis=0))


def linear_rdd(s, bandwidth=DEFAULT_BANDWIDTH, offset=OFFSET_PERPENDICULAR, workers=1) -> RddReport:
    """Score every point of the series under the straight-line view."""
    if offset not in (OFFSET_PERPENDICULAR, OFFSET_VERTICAL):
        raise ValueError(f"offset must be perpendicular or vertical, got {offset!r}")
    d = validate_series(s)
    weights = linear_pair_weights(d, bandwidth, workers)
    X, Y = weights.X, weights.Y
    vertical = offset == OFFSET_VERTICAL
    n = d.size
    if NUMBA_ENABLED:
        def accum(lo, hi):
            return _pair_accum_range(d, float(bandwidth), vertical, X, Y, lo, hi)

        ssum, osum = ordered_map_reduce(accum, n * (n - 1), workers, chunk=4096)
    else:
        def accum(lo, hi):
            return _pair_accum_rows(d, float(bandwidth), vertical, X, Y, lo, hi)

        ssum, osum = ordered_map_reduce(accum, n, workers, chunk=16)
    return rdd_from_sums(ssum, osum, weights.total)
