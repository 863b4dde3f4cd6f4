"""Compare the numba kernels against the pure-numpy fallbacks.

Runs itself once per backend in a subprocess (the backend is chosen at
import time from RELDEV_BACKEND) and prints a side-by-side table. Timings
take the best of `repeat` runs after one warmup call so JIT compilation
does not pollute the numbers.

Usage: python3 benchmarks/bench_backends.py [--sizes 50,100,200]
"""

import argparse
import json
import os
import subprocess
import sys
import time

CASES = ("linear", "curve", "lkts")


def _series(n):
    import numpy as np

    x = np.arange(n, dtype=float)
    y = np.sin(2 * np.pi * x / max(n - 1, 1))
    y[n // 6] += 2.0
    y[(2 * n) // 3] -= 1.5
    return y


def _run_case(case, n, repeat=3):
    import numpy as np  # noqa: F401 - keep import cost out of the timings

    from reldev import TurnPattern, curve_rdd, linear_rdd, lkts_through

    y = _series(n)

    def work():
        if case == "linear":
            return linear_rdd(y)
        if case == "curve":
            return curve_rdd(y, TurnPattern("+", 2))
        return lkts_through(y, n // 2, 2)

    work()  # warmup / compile
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        work()
        best = min(best, time.perf_counter() - t0)
    return best


def _worker(sizes):
    from reldev import BACKEND

    rows = {}
    for case in CASES:
        rows[case] = {str(n): _run_case(case, n) for n in sizes}
    print(json.dumps({"backend": BACKEND, "rows": rows}))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="50,100,200")
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if args.worker:
        _worker(sizes)
        return

    results = {}
    for backend in ("numba", "numpy"):
        env = dict(os.environ, RELDEV_BACKEND=backend)
        out = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--worker", "--sizes", args.sizes],
            env=env,
            capture_output=True,
            text=True,
            check=True,
        )
        payload = json.loads(out.stdout.strip().splitlines()[-1])
        results[backend] = payload["rows"]

    print(f"{'case':<8} {'n':>5} {'numba (s)':>12} {'numpy (s)':>12} {'speedup':>9}")
    for case in CASES:
        for n in sizes:
            tb = results["numba"][case][str(n)]
            tn = results["numpy"][case][str(n)]
            print(f"{case:<8} {n:>5} {tb:>12.5f} {tn:>12.5f} {tn / tb:>8.1f}x")


if __name__ == "__main__":
    main()
