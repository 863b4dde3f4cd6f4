"""Shared domain types: series validation, turn patterns, turn counting."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import EmptyInput, NonFiniteValue

# A validated series is a 1-D float64 array; index order is time order.
Series = np.ndarray

PLUS = "+"
MINUS = "-"
ANY = "any"


def validate_series(raw) -> Series:
    """Coerce raw values to a float series, rejecting empty or non-finite input."""
    values = np.asarray(raw, dtype=float).ravel()
    if values.size == 0:
        raise EmptyInput("series must contain at least one value")
    finite = np.isfinite(values)
    if not finite.all():
        raise NonFiniteValue(int(np.argmin(finite)))
    return values


@dataclass(frozen=True)
class TurnPattern:
    """A curve pattern: first-extremum type (or direction when turns=0) and exact turn count."""

    sign: str  # "+", "-" or "any"
    turns: int

    def __post_init__(self):
        if self.sign not in (PLUS, MINUS, ANY):
            raise ValueError(f"pattern sign must be '+', '-' or 'any', got {self.sign!r}")
        if self.turns < 0:
            raise ValueError("pattern turn count must be nonnegative")


def turn_structure(values) -> tuple[int, Optional[str], bool]:
    """Count strict interior extrema of a series, left to right.

    Returns (turns, sign, strict). The sign is the direction of the first
    nonzero step: "+" when the series starts by rising, "-" when it starts
    by falling, None when every value is equal or fewer than two points
    exist. For one or more turns this coincides with the type of the first
    extremum (a rising start peaks at a maximum), and for a monotone run it
    is the run's direction. strict is False when any adjacent pair of
    values is equal; plateaus contribute no turn.
    """
    v = np.asarray(values, dtype=float)
    n = v.size
    if n < 2:
        return 0, None, True
    diffs = np.diff(v)
    strict = bool((diffs != 0).all())
    turns = 0
    sign = None
    prev = 0.0
    for step in diffs:
        if step == 0:
            continue
        if sign is None:
            sign = PLUS if step > 0 else MINUS
        if prev != 0 and (step > 0) != (prev > 0):
            turns += 1
        prev = step
    return turns, sign, strict


@dataclass
class DetectionResult:
    """Outcome of one scoring + cut run."""

    rdd: "RddReport"
    iir: "IirReport"
    outliers: set = field(default_factory=set)
