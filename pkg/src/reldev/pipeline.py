"""Detection pipeline: score with a view, cut with the sorted-gap rule.

`detect` composes one scoring pass with the gap cut. `detect_iterative`
repeats that, deleting each round's outliers so points they masked can
surface in later rounds, until a round comes back clean or the round
budget runs out.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .core import DetectionResult, Series, TurnPattern, validate_series
from .curve import curve_rdd
from .gaussian import gaussian_rdd
from .iir import DEFAULT_THRESHOLD, iir_profile
from .linear import DEFAULT_BANDWIDTH, OFFSET_PERPENDICULAR, linear_rdd

VIEWS = ("linear", "gaussian", "curve")

# smallest series each view can score
_VIEW_FLOOR = {"linear": 3, "gaussian": 2, "curve": 3}


def detect(
    s,
    view: str,
    c: float = DEFAULT_THRESHOLD,
    pattern: Optional[TurnPattern] = None,
    bandwidth: float = DEFAULT_BANDWIDTH,
    offset: str = OFFSET_PERPENDICULAR,
    workers: int = 1,
) -> DetectionResult:
    """Score the series under one view, then cut the scores into outliers."""
    values = validate_series(s)
    if view == "linear":
        report = linear_rdd(values, bandwidth=bandwidth, offset=offset, workers=workers)
    elif view == "gaussian":
        report = gaussian_rdd(values, workers=workers)
    elif view == "curve":
        if pattern is None:
            raise ValueError("curve view needs a turn pattern")
        report = curve_rdd(values, pattern, bandwidth=bandwidth, workers=workers)
    else:
        raise ValueError(f"unknown view {view!r}; expected one of {VIEWS}")
    profile = iir_profile(report.rdd, c)
    return DetectionResult(rdd=report, iir=profile, outliers=set(profile.outliers))


@dataclass
class IterationTrace:
    """History of the remove-and-rescore loop.

    Each round pairs the set of removed indices (in the original series'
    numbering) with that round's DetectionResult, whose arrays refer to
    the contiguous survivor series the round actually scored. converged
    is True when the final round removed nothing.
    """

    rounds: list = field(default_factory=list)
    surviving: Series = None
    converged: bool = False


def detect_iterative(
    s,
    view: str,
    c: float = DEFAULT_THRESHOLD,
    max_rounds: Optional[int] = None,
    pattern: Optional[TurnPattern] = None,
    bandwidth: float = DEFAULT_BANDWIDTH,
    offset: str = OFFSET_PERPENDICULAR,
    workers: int = 1,
) -> IterationTrace:
    """Repeat detect, deleting outliers each round, until a clean round.

    Survivors are renumbered contiguously before rescoring; the trace keeps
    every round's removals in original-series indices. Stops early (not
    converged) when the survivor count falls below what the view can score
    or when max_rounds is exhausted.
    """
    values = validate_series(s)
    if max_rounds is None:
        max_rounds = values.size
    if max_rounds < 1:
        raise ValueError("max_rounds must be at least 1")
    original = np.arange(values.size)
    trace = IterationTrace()
    current = values
    floor = _VIEW_FLOOR.get(view, 1)
    for _ in range(max_rounds):
        if current.size < floor:
            break
        result = detect(
            current, view, c, pattern=pattern, bandwidth=bandwidth, offset=offset, workers=workers
        )
        removed = {int(original[k]) for k in result.outliers}
        trace.rounds.append((removed, result))
        if not removed:
            trace.converged = True
            break
        keep = np.array(sorted(set(range(current.size)) - result.outliers), dtype=int)
        current = current[keep]
        original = original[keep]
    trace.surviving = current
    return trace
