"""Shared datasets: classical outlier benchmarks and synthetic series."""

import numpy as np

# Barnett & Lewis astronomy example: five small values plus two huge ones.
BARNETT = np.array([3.0, 4.0, 7.0, 8.0, 10.0, 949.0, 951.0])
BARNETT_GAUSS_RDD = [20.41, 20.30, 20.16, 20.16, 20.28, 1534.55, 1538.79]

# A near-flat run with a one-sided hump; published line-view scores.
S1 = np.array(
    [3.1, 2.9, 2.85, 3.0, 3.05, 2.9, 3.2, 5.2, 8.5, 5.4,
     5.3, 5.1, 3.1, 3.05, 3.0, 2.99, 3.0, 3.02, 3.2]
)
S1_LINEAR_RDD = np.array(
    [0.001, 0.025, 0.061, 0.018, 0.031, 0.067, 0.138, 17.956, 27.693,
     23.879, 18.482, 14.609, 0.021, 0.003, 0.005, 0.006, 0.008, 0.010, 0.002]
)
S1_OUTLIERS = {7, 8, 9, 10, 11}

# Classical small benchmarks with their published normal-view scores.
ROSNER = np.array([40.0, 75, 80, 83, 86, 88, 90, 92, 93, 95])
ROSNER_RDD = [167.84, 3.76, 1.30, 0.74, 0.56, 0.60, 0.76, 1.08, 1.34, 2.10]
ROSNER_OUTLIER_VALUES = {40.0}

GRUBBS1 = np.array([568.0, 570, 570, 570, 572, 572, 572, 578, 584, 596])
GRUBBS1_RDD = [1.11, 0.52, 0.52, 0.52, 0.43, 0.43, 0.43, 2.42, 11.67, 78.95]
GRUBBS1_OUTLIER_VALUES = {596.0}

GRUBBS3 = np.array([2.02, 2.22, 3.04, 3.23, 3.59, 3.73, 3.94, 4.05, 4.11, 4.13])
GRUBBS3_RDD = [3.72, 3.00, 0.47, 0.28, 0.15, 0.14, 0.17, 0.21, 0.24, 0.25]
GRUBBS3_OUTLIER_VALUES = {2.02, 2.22}

CHSHNY = np.array([0.0, 0.8, 1.0, 1.2, 1.3, 1.3, 1.4, 1.8, 2.4, 4.6])
CHSHNY_RDD = [0.92, 0.15, 0.09, 0.06, 0.05, 0.05, 0.06, 0.13, 0.57, 11.60]
CHSHNY_OUTLIER_VALUES = {4.6}

CLASSICAL = [
    ("rosner", ROSNER, ROSNER_RDD, ROSNER_OUTLIER_VALUES),
    ("grubbs1", GRUBBS1, GRUBBS1_RDD, GRUBBS1_OUTLIER_VALUES),
    ("grubbs3", GRUBBS3, GRUBBS3_RDD, GRUBBS3_OUTLIER_VALUES),
    ("chshny", CHSHNY, CHSHNY_RDD, CHSHNY_OUTLIER_VALUES),
]


def patched_sine() -> np.ndarray:
    """48-point sine wave with a -1 dent at x=7..10 and a +2 shelf at x=28..32."""
    x = np.arange(48, dtype=float)
    y = np.sin(2 * np.pi * x / 47)
    y[7:11] -= 1.0
    y[28:33] += 2.0
    return y


SINE_PATCHED_POSITIONS = {7, 8, 9, 10, 28, 29, 30, 31, 32}
# Rank order of the patched positions by score, strongest first.
SINE_RANKED = [28, 32, 29, 31, 30, 7, 10, 8, 9]
# Published curve-view scores for that ranking (3 significant figures).
SINE_TABLE4_RDD = [11.6, 11.6, 11.5, 11.5, 11.4, 5.7, 5.6, 5.6, 5.6]


def random_turn_series(rng, n, turns, sign):
    """A series that is itself an exact strict (sign, turns) shape.

    Builds turns+1 strictly monotone segments with alternating direction,
    starting upward for "+" and downward for "-".
    """
    ascending = sign == "+"
    assert n >= turns + 2, "need room for interior extrema"
    # a new segment starting at value index c flips the step into c, putting
    # the extremum at c-1; c >= 2 keeps that strictly interior
    cuts = sorted(rng.choice(np.arange(2, n), size=turns, replace=False)) if turns else []
    bounds = [0] + [int(c) for c in cuts] + [n]
    values = np.empty(n)
    level = 0.0
    for seg, (a, b) in enumerate(zip(bounds[:-1], bounds[1:])):
        steps = rng.uniform(0.5, 1.5, b - a)
        direction = 1.0 if ascending == (seg % 2 == 0) else -1.0
        for k in range(a, b):
            level += direction * steps[k - a]
            values[k] = level
    return values
