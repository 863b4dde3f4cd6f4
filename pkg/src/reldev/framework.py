"""Generic deviation-scoring engine.

A view supplies a finite family of evaluation elements. Element e judges
every point k with a similarity sim(k, e) in [0, 1] and a nonnegative offset
off(k, e), and carries a nonnegative weight w(e). The per-point score is

    rdd[k] = -ln(Sbar_k) * Obar_k

where Sbar_k and Obar_k are the weight-averaged similarity and offset of
point k over all elements. Views only need to produce the weighted sums;
how they enumerate elements (pairs, anchors, models) is their business.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateView

LN_CLAMP = 1e-12

# Fixed chunk length for parallel reduction. Partial sums are always taken
# over these same element ranges and combined in range order, so results do
# not depend on the worker count.
_CHUNK = 128


@dataclass
class RddReport:
    rdd: np.ndarray
    mean_sim: np.ndarray
    mean_off: np.ndarray
    clamped: list = field(default_factory=list)  # points whose mean similarity hit the ln clamp


def rdd_from_sums(sim_wsum, off_wsum, weight_total) -> RddReport:
    """Assemble a report from weighted sums and the total element weight."""
    if not np.isfinite(weight_total) or weight_total <= 0:
        raise DegenerateView("total view weight must be positive")
    sbar = np.asarray(sim_wsum, dtype=float) / weight_total
    obar = np.asarray(off_wsum, dtype=float) / weight_total
    clamped = np.nonzero(sbar < LN_CLAMP)[0]
    safe = np.clip(sbar, LN_CLAMP, 1.0)
    # Means within a couple of ulps of 1 are rounding residue of an exact
    # fit (numerator and denominator sum the same weights); snap them so a
    # unanimous similarity of 1 yields an exact zero score.
    safe[safe > 1.0 - 1e-15] = 1.0
    rdd = -np.log(safe) * obar + 0.0  # + 0.0 normalizes -0.0 at exact fits
    return RddReport(rdd, sbar, obar, [int(k) for k in clamped])


def rdd_scores(provider, workers: int = 1) -> RddReport:
    """Score every point of the provider's series.

    The provider must implement weighted_sums(workers) returning
    (sim_wsum, off_wsum, weight_total).
    """
    sim_wsum, off_wsum, weight_total = provider.weighted_sums(workers)
    return rdd_from_sums(sim_wsum, off_wsum, weight_total)


def chunk_ranges(count, chunk=_CHUNK):
    """Fixed [start, stop) ranges covering 0..count, independent of workers."""
    return [(a, min(a + chunk, count)) for a in range(0, count, chunk)]


def ordered_map_reduce(fn, count, workers=1, chunk=_CHUNK):
    """Apply fn(start, stop) to fixed chunks and sum the results in chunk order.

    fn must return a tuple of arrays/scalars. Chunk boundaries depend only on
    `count`, and partials are reduced left to right, so the result is
    bit-identical for every worker count.
    """
    ranges = chunk_ranges(count, chunk)
    if workers > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(lambda r: fn(*r), ranges))
    else:
        partials = [fn(*r) for r in ranges]
    acc = list(partials[0])
    for part in partials[1:]:
        for slot, value in enumerate(part):
            acc[slot] = acc[slot] + value
    return tuple(acc)


class MatrixView:
    """A view small enough to hold its element-by-point matrices in memory.

    sim and off have shape (elements, points); weights has shape (elements,).
    """

    def __init__(self, sim, off, weights):
        self.sim = np.asarray(sim, dtype=float)
        self.off = np.asarray(off, dtype=float)
        self.weights = np.asarray(weights, dtype=float)

    def weighted_sums(self, workers: int = 1):
        w = self.weights

        def partial(a, b):
            block = w[a:b, None]
            return (
                (block * self.sim[a:b]).sum(axis=0),
                (block * self.off[a:b]).sum(axis=0),
                w[a:b].sum(),
            )

        return ordered_map_reduce(partial, w.size, workers)
