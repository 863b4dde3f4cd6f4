"""Value-anchored normal-density view for unordered univariate data.

Every datum anchors a normal density centered on itself whose 3-sigma reach
is the furthest value in the dataset. Under anchor i, point j scores the
density ratio f(v_j)/f(v_i) as similarity and |v_j - v_i| as offset. An
anchor system's weight is how typical its own center is: the summed
similarity that all systems assign to that value. Typical data therefore
judge with authority while extreme data judge with almost none, which is
what pushes their scores apart.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import validate_series
from .errors import DegenerateSigma, TooFewPoints
from .framework import MatrixView, RddReport, rdd_scores


@dataclass(frozen=True)
class GaussianAnchor:
    center: float
    furthest: float

    @property
    def sigma(self) -> float:
        return abs(self.furthest - self.center) / 3.0


def build_anchors(values) -> list[GaussianAnchor]:
    """One anchor per datum; furthest-value ties resolve toward the larger value."""
    v = np.asarray(values, dtype=float)
    dist = np.abs(v[None, :] - v[:, None])
    reach = dist.max(axis=1)
    candidates = np.where(dist == reach[:, None], v[None, :], -np.inf)
    furthest = candidates.max(axis=1)
    return [GaussianAnchor(float(c), float(f)) for c, f in zip(v, furthest)]


def gaussian_sim_off(anchor: GaussianAnchor, value: float) -> tuple[float, float]:
    """Similarity and offset of a single value under one anchor."""
    sigma = anchor.sigma
    if sigma == 0:
        raise DegenerateSigma("anchor has zero spread; all values equal its center")
    diff = value - anchor.center
    return float(np.exp(-(diff * diff) / (2.0 * sigma * sigma))), abs(float(diff))


class GaussianView(MatrixView):
    def __init__(self, values):
        v = np.asarray(values, dtype=float)
        off = np.abs(v[None, :] - v[:, None])
        reach = off.max(axis=1)
        sigma = reach / 3.0
        sim = np.exp(-(off * off) / (2.0 * sigma * sigma)[:, None])
        weights = sim.sum(axis=0)
        super().__init__(sim, off, weights)


def gaussian_rdd(values, workers: int = 1) -> RddReport:
    """Score each value's deviation from the dataset under the normal-density view."""
    v = validate_series(values)
    if v.size < 2:
        raise TooFewPoints("need at least two values")
    if v.max() == v.min():
        ones = np.ones(v.size)
        zeros = np.zeros(v.size)
        return RddReport(zeros.copy(), ones, zeros.copy())
    return rdd_scores(GaussianView(v), workers)
