"""Command-line interface.

Subcommands: `iir` (cut raw values directly), `rdd` (view scores only),
`detect` (scores + cut, optionally iterated), and `lkts` (longest
turn-constrained subsequence). Input is a CSV/JSON file or '-' for stdin;
the input encoding is sniffed (a leading '[' means JSON). `--format`
chooses the report encoding written to stdout. Exit codes: 0 success,
1 bad input data, 2 bad configuration.
"""

from __future__ import annotations

import argparse
import io
import sys

from .core import ANY, DetectionResult, TurnPattern
from .errors import ConfigError, InputError, IoError
from .iir import DEFAULT_THRESHOLD, iir_profile
from .linear import DEFAULT_BANDWIDTH, OFFSET_PERPENDICULAR, OFFSET_VERTICAL
from .lkts import lkts_through
from .pipeline import VIEWS, detect, detect_iterative
from .plotsvg import render_plot
from .report import ReportDocument, encode_report, iir_payload, parse_input, report_csv


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reldev", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("input", nargs="?", default="-", help="data file or '-' for stdin")
        p.add_argument("--format", choices=("json", "csv"), default="json", help="report format")
        p.add_argument("--one-based", action="store_true", help="display 1-based indices")
        p.add_argument("--plot", metavar="FILE.svg", help="write an SVG chart")
        p.add_argument("--seed", type=int, help="seed for randomized generator tooling")
        p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD, help="gap cut threshold")

    def add_view(p):
        p.add_argument("--view", choices=VIEWS, required=True)
        p.add_argument("--bandwidth", type=float, default=DEFAULT_BANDWIDTH, help="angle similarity bandwidth")
        p.add_argument(
            "--offset",
            choices=(OFFSET_PERPENDICULAR, OFFSET_VERTICAL),
            default=OFFSET_PERPENDICULAR,
            help="line view offset measure",
        )
        p.add_argument("--turns", type=int, help="curve pattern turn count")
        p.add_argument("--sign", choices=("+", "-", "any"), default=ANY, help="curve pattern sign")

    p_iir = sub.add_parser("iir", help="direct gap cut on the raw values")
    add_common(p_iir)

    p_rdd = sub.add_parser("rdd", help="view scores without the cut")
    add_common(p_rdd)
    add_view(p_rdd)

    p_detect = sub.add_parser("detect", help="score then cut; optionally iterate")
    add_common(p_detect)
    add_view(p_detect)
    p_detect.add_argument("--iterative", action="store_true", help="remove and rescore until clean")
    p_detect.add_argument("--max-rounds", type=int, help="iteration budget (default: series length)")

    p_lkts = sub.add_parser("lkts", help="longest subsequence with exact turn count")
    add_common(p_lkts)
    p_lkts.add_argument("--turns", type=int, required=True)
    p_lkts.add_argument("--anchor", type=int, default=0, help="index the path must pass through")
    p_lkts.add_argument("--sign", choices=("+", "-", "any"), default=ANY)
    p_lkts.add_argument("--at-most", action="store_true", help="allow any turn count up to --turns")
    return parser


def _load(args):
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise IoError(f"cannot read {args.input}: {exc}") from exc
    fmt = "json" if text.lstrip()[:1] == "[" else "csv"
    return parse_input(io.StringIO(text), fmt)


def _pattern(args) -> TurnPattern:
    if args.turns is None:
        raise ConfigError("curve view needs --turns")
    return TurnPattern(args.sign, args.turns)


def _base_params(args, **extra) -> dict:
    params = {"one_based": bool(args.one_based)}
    if args.seed is not None:
        params["seed"] = args.seed
    params.update(extra)
    return params


def _emit(doc: ReportDocument, values, args) -> None:
    if args.format == "csv":
        sys.stdout.write(report_csv(doc, values))
    else:
        sys.stdout.write(encode_report(doc) + "\n")


def run_cli(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        values = _load(args)
        if args.command == "iir":
            profile = iir_profile(values, args.threshold)
            doc = ReportDocument(
                method="iir",
                params=_base_params(args, threshold=args.threshold),
                n=int(values.size),
                iir=iir_payload(profile),
                outliers=sorted(profile.outliers),
            )
            _emit(doc, values, args)
            if args.plot:
                render_plot(values, DetectionResult(rdd=None, iir=profile, outliers=profile.outliers), args.plot)
            return 0

        if args.command == "lkts":
            result = lkts_through(values, args.anchor, args.turns, sign=args.sign, at_most=args.at_most)
            shift = 1 if args.one_based else 0
            if args.format == "csv":
                lines = ["index,value"]
                if result is not None:
                    lines += [f"{i + shift},{float(values[i])!r}" for i in result.indices]
                sys.stdout.write("\n".join(lines) + "\n")
            else:
                import json

                payload = {
                    "method": "lkts",
                    "params": _base_params(
                        args, turns=args.turns, anchor=args.anchor, sign=args.sign, at_most=bool(args.at_most)
                    ),
                    "n": int(values.size),
                    "result": None
                    if result is None
                    else {
                        "indices": [i + shift for i in result.indices],
                        "sign": result.sign,
                        "turns": result.turns,
                        "length": result.length,
                    },
                }
                sys.stdout.write(json.dumps(payload, indent=2) + "\n")
            if args.plot:
                members = set(result.indices) if result is not None else set()
                render_plot(values, DetectionResult(rdd=None, iir=None, outliers=members), args.plot)
            return 0

        # rdd / detect share view wiring
        view_kwargs = dict(bandwidth=args.bandwidth, offset=args.offset, workers=1)
        pattern = _pattern(args) if args.view == "curve" else None
        params = _base_params(args, view=args.view, threshold=args.threshold, bandwidth=args.bandwidth)
        if args.view == "linear":
            params["offset"] = args.offset
        if pattern is not None:
            params["pattern"] = {"sign": pattern.sign, "turns": pattern.turns}

        if args.command == "rdd":
            result = detect(values, args.view, args.threshold, pattern=pattern, **view_kwargs)
            doc = ReportDocument(
                method="rdd",
                params=params,
                n=int(values.size),
                rdd=[float(x) for x in result.rdd.rdd],
                outliers=[],
            )
            _emit(doc, values, args)
            if args.plot:
                render_plot(values, DetectionResult(rdd=result.rdd, iir=None, outliers=set()), args.plot)
            return 0

        if args.command == "detect":
            if args.iterative:
                trace = detect_iterative(
                    values,
                    args.view,
                    args.threshold,
                    max_rounds=args.max_rounds,
                    pattern=pattern,
                    **view_kwargs,
                )
                first = trace.rounds[0][1] if trace.rounds else None
                removed_all = sorted(set().union(*(r[0] for r in trace.rounds)) if trace.rounds else set())
                params["iterative"] = True
                if args.max_rounds is not None:
                    params["max_rounds"] = args.max_rounds
                doc = ReportDocument(
                    method="detect",
                    params=params,
                    n=int(values.size),
                    rdd=None if first is None else [float(x) for x in first.rdd.rdd],
                    iir=None if first is None else iir_payload(first.iir),
                    outliers=removed_all,
                    rounds=[
                        {"removed": sorted(removed), "rdd": [float(x) for x in res.rdd.rdd]}
                        for removed, res in trace.rounds
                    ],
                )
                plot_result = DetectionResult(
                    rdd=first.rdd if first else None, iir=None, outliers=set(removed_all)
                )
            else:
                result = detect(values, args.view, args.threshold, pattern=pattern, **view_kwargs)
                doc = ReportDocument(
                    method="detect",
                    params=params,
                    n=int(values.size),
                    rdd=[float(x) for x in result.rdd.rdd],
                    iir=iir_payload(result.iir),
                    outliers=sorted(result.outliers),
                )
                plot_result = result
            _emit(doc, values, args)
            if args.plot:
                render_plot(values, plot_result, args.plot)
            return 0

        raise ConfigError(f"unknown command {args.command!r}")
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())
