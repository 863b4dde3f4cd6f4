"""The expanding cut: turn a score vector into an outlier set.

Scores are sorted ascending and the normalized gaps between consecutive
order statistics are examined. A gap that expands faster than anything seen
before it marks the point where the upper tail separates from the bulk; the
cut is only accepted in the upper half of the ranks, which caps the number
of flagged points below n/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import validate_series

DEFAULT_THRESHOLD = 1.81


@dataclass
class IirReport:
    sorted_values: np.ndarray   # ascending order statistics r_0..r_{n-1}
    sort_permutation: np.ndarray  # original index of each rank
    delta: np.ndarray           # normalized gaps, one per rank 1..n-1
    er: np.ndarray              # expansion rate: delta * (n-1)
    ihr: np.ndarray             # inhibition rate: delta / (delta - prior max)
    iir: np.ndarray             # er / ihr, evaluated robustly (see iir_profile)
    cut_rank: Optional[int]     # first rank past the cut, or None
    threshold: float
    outliers: set               # original indices with score >= the cut value


def iir_profile(scores, c: float = DEFAULT_THRESHOLD) -> IirReport:
    """Gap-expansion profile of a score vector plus the resulting outlier set.

    With r the ascending order statistics and range R = r_{n-1} - r_0:

        delta_i = (r_i - r_{i-1}) / R                 i = 1..n-1
        er_i    = delta_i * (n - 1)
        ihr_i   = delta_i / (delta_i - m_i),  m_i = max(delta_1..delta_{i-1}), m_1 = 0
        iir_i   = er_i / ihr_i = (n - 1) * (delta_i - m_i)

    The last identity is used directly: it stays finite when delta_i equals
    the running maximum (ihr is infinite there, the ratio's limit is 0) and
    when delta_i is 0 (ihr is 0 there, the limit is -(n-1)*m_i).

    The cut is the smallest rank t with iir_t > c and t > (n-1)/2; every
    point whose score is >= r_t is flagged. A constant vector has no gaps
    and yields an empty profile and no outliers.
    """
    if c <= 0:
        raise ValueError("threshold must be positive")
    values = validate_series(scores)
    n = values.size
    order = np.argsort(values, kind="stable")
    ranked = values[order]
    span = ranked[-1] - ranked[0]

    empty = np.empty(0)
    if n < 2 or span == 0:
        return IirReport(ranked, order, empty, empty, empty, empty, None, c, set())

    delta = np.diff(ranked) / span
    prior_max = np.concatenate(([0.0], np.maximum.accumulate(delta)[:-1]))
    er = delta * (n - 1)
    iir = (n - 1) * (delta - prior_max)
    with np.errstate(divide="ignore", invalid="ignore"):
        ihr = np.where(delta == prior_max, np.inf, delta / (delta - prior_max))
    ihr[0] = 1.0

    cut_rank = None
    half = (n - 1) / 2
    hits = np.nonzero(iir > c)[0]
    for gap_index in hits:
        rank = int(gap_index) + 1  # gap i sits between ranks i-1 and i
        if rank > half:
            cut_rank = rank
            break

    outliers: set = set()
    if cut_rank is not None:
        cut_value = ranked[cut_rank]
        outliers = {int(k) for k in np.nonzero(values >= cut_value)[0]}

    return IirReport(ranked, order, delta, er, ihr, iir, cut_rank, c, outliers)
