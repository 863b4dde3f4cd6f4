"""Pattern-relative outlier scoring for one-dimensional series.

Points are scored by how much they deviate from a chosen pattern view —
pairwise straight lines, per-datum Gaussian anchors, or turn-constrained
curve models — and the scores are cut into an outlier set by an expanding
scan of their sorted gaps. See the README for the CLI and examples.
"""

from ._backend import BACKEND, NUMBA_ENABLED
from .core import ANY, MINUS, PLUS, DetectionResult, TurnPattern, turn_structure, validate_series
from .curve import CurveContext, curve_context, curve_rdd, curve_sim_off, suggest_pattern
from .errors import (
    ConfigError,
    EmptyInput,
    IndexOutOfRange,
    InputError,
    IoError,
    NegativeTurns,
    NonFiniteValue,
    ParseError,
    ReldevError,
    TooFewPoints,
    TooLarge,
    ZeroRay,
)
from .framework import RddReport, rdd_scores
from .gaussian import GaussianAnchor, build_anchors, gaussian_rdd, gaussian_sim_off
from .iir import DEFAULT_THRESHOLD, IirReport, iir_profile
from .linear import (
    DEFAULT_BANDWIDTH,
    PairWeights,
    angle_degrees,
    linear_pair_weights,
    linear_rdd,
    linear_sim_off,
)
from .lkts import DpTable, SubsequenceResult, brute_force_lkts, lkts_from_start, lkts_through
from .pipeline import IterationTrace, detect, detect_iterative
from .report import (
    ReportDocument,
    decode_report,
    encode_report,
    iir_payload,
    parse_input,
    report_csv,
)
from .plotsvg import render_plot, render_svg

__version__ = "0.1.0"

__all__ = [
    "ANY",
    "BACKEND",
    "ConfigError",
    "CurveContext",
    "DEFAULT_BANDWIDTH",
    "DEFAULT_THRESHOLD",
    "DetectionResult",
    "DpTable",
    "EmptyInput",
    "GaussianAnchor",
    "IirReport",
    "IndexOutOfRange",
    "InputError",
    "IoError",
    "IterationTrace",
    "MINUS",
    "NUMBA_ENABLED",
    "NegativeTurns",
    "NonFiniteValue",
    "PLUS",
    "PairWeights",
    "ParseError",
    "RddReport",
    "ReldevError",
    "ReportDocument",
    "SubsequenceResult",
    "TooFewPoints",
    "TooLarge",
    "TurnPattern",
    "ZeroRay",
    "angle_degrees",
    "brute_force_lkts",
    "build_anchors",
    "curve_context",
    "curve_rdd",
    "curve_sim_off",
    "decode_report",
    "detect",
    "detect_iterative",
    "encode_report",
    "gaussian_rdd",
    "gaussian_sim_off",
    "iir_payload",
    "iir_profile",
    "linear_pair_weights",
    "linear_rdd",
    "linear_sim_off",
    "lkts_from_start",
    "lkts_through",
    "parse_input",
    "rdd_scores",
    "render_plot",
    "render_svg",
    "report_csv",
    "suggest_pattern",
    "turn_structure",
    "validate_series",
]
