"""Report serialization and numeric input parsing for the CLI.

The JSON layout is a fixed schema: method, params, n, rdd, iir, outliers,
rounds. Indices are stored 0-based; when params["one_based"] is true the
encoder shifts every displayed index up by one and the decoder shifts it
back, so documents always round-trip to the same in-memory value.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import EmptyInput, IoError, ParseError
from .iir import IirReport

_SCHEMA_KEYS = ("method", "params", "n", "rdd", "iir", "outliers", "rounds")


@dataclass
class ReportDocument:
    method: str
    params: dict
    n: int
    rdd: Optional[list] = None
    iir: Optional[dict] = None
    outliers: list = field(default_factory=list)
    rounds: Optional[list] = None


def iir_payload(profile: IirReport) -> dict:
    """Nested dict form of a gap profile (0-based cut rank, or None)."""
    return {
        "ranks": [float(v) for v in profile.sorted_values],
        "delta": [float(v) for v in profile.delta],
        "er": [float(v) for v in profile.er],
        "ihr": [float(v) for v in profile.ihr],
        "iir": [float(v) for v in profile.iir],
        "cut": None if profile.cut_rank is None else int(profile.cut_rank),
    }


def _shift_indices(doc: dict, delta: int) -> dict:
    doc = dict(doc)
    doc["outliers"] = [i + delta for i in doc.get("outliers") or []]
    iir = doc.get("iir")
    if iir is not None:
        iir = dict(iir)
        if iir.get("cut") is not None:
            iir["cut"] = iir["cut"] + delta
        doc["iir"] = iir
    rounds = doc.get("rounds")
    if rounds is not None:
        shifted = []
        for entry in rounds:
            entry = dict(entry)
            entry["removed"] = [i + delta for i in entry.get("removed", [])]
            if entry.get("outliers") is not None:
                entry["outliers"] = [i + delta for i in entry["outliers"]]
            shifted.append(entry)
        doc["rounds"] = shifted
    return doc


def encode_report(doc: ReportDocument) -> str:
    """Serialize to JSON; floats keep full precision via their repr."""
    payload = {key: getattr(doc, key) for key in _SCHEMA_KEYS}
    if doc.params.get("one_based"):
        payload = _shift_indices(payload, +1)
    return json.dumps(payload, indent=2, allow_nan=True)


def decode_report(text: str) -> ReportDocument:
    raw = json.loads(text)
    if raw.get("params", {}).get("one_based"):
        raw = _shift_indices(raw, -1)
    return ReportDocument(
        method=raw.get("method"),
        params=raw.get("params") or {},
        n=raw.get("n"),
        rdd=raw.get("rdd"),
        iir=raw.get("iir"),
        outliers=raw.get("outliers") or [],
        rounds=raw.get("rounds"),
    )


def report_csv(doc: ReportDocument, values) -> str:
    """Flat per-point table: index, value, rdd (blank when absent), outlier flag."""
    shift = 1 if doc.params.get("one_based") else 0
    flagged = set(doc.outliers)
    lines = ["index,value,rdd,outlier"]
    for k, v in enumerate(values):
        score = "" if doc.rdd is None else repr(float(doc.rdd[k]))
        lines.append(f"{k + shift},{float(v)!r},{score},{int(k in flagged)}")
    return "\n".join(lines) + "\n"


# --- input ---------------------------------------------------------------


def _read_source(source) -> str:
    if hasattr(source, "read"):
        return source.read()
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise IoError(f"cannot read {source}: {exc}") from exc


def parse_input(source, format: str = "csv") -> np.ndarray:
    """Read a series from a path, '-', or file object.

    CSV carries one value per line; '#' starts a comment. A two-column
    "x,y" form is accepted when the x column counts 0,1,2,... exactly —
    it is validated and discarded, never used as geometry. JSON must be a
    flat array of numbers.
    """
    text = _read_source(source)
    if format == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        if not isinstance(data, list) or not all(isinstance(v, (int, float)) for v in data):
            raise ParseError("JSON input must be a flat array of numbers")
        if not data:
            raise EmptyInput("JSON array is empty")
        return np.asarray(data, dtype=float)
    if format != "csv":
        raise ValueError(f"format must be csv or json, got {format!r}")
    values = []
    row = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = [p.strip() for p in body.split(",")]
        if len(parts) == 2:
            try:
                x = float(parts[0])
            except ValueError as exc:
                raise ParseError(f"bad index {parts[0]!r}", line=lineno) from exc
            if x != row:
                raise ParseError(f"x column must count 0,1,2,... (got {parts[0]} at row {row})", line=lineno)
            token = parts[1]
        elif len(parts) == 1:
            token = parts[0]
        else:
            raise ParseError(f"expected 1 or 2 columns, got {len(parts)}", line=lineno)
        try:
            values.append(float(token))
        except ValueError as exc:
            raise ParseError(f"bad number {token!r}", line=lineno) from exc
        row += 1
    if not values:
        raise EmptyInput("no data rows")
    return np.asarray(values, dtype=float)
