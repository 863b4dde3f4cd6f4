"""Longest subsequence with an exact number of turns.

A direction state is the pair (sign, t): sign is the type of the first
extremum the path will produce ("+" rises first, "-" falls first) and t is
the number of turns taken so far. The current segment of such a path
ascends exactly when (sign is "+" and t is even) or (sign is "-" and t is
odd), so transitions either continue that direction (same t) or step the
opposite way, turning at the previous element (t + 1).

Two tables drive the solver. `DpTable.best[s][i][t]` holds the longest
path from index 0 to i in state (s, t) with `pred` for predecessor walks.
A companion reachability table (`_ext_fill`) stores how many points can
still be appended after an endpoint given the arrival direction and the
remaining turn budget; it lets the reconstruction walk forward greedily
and pick the lexicographically smallest witness among equal-length optima.

Anchoring in the middle of the series splits it at the anchor, solves both
halves (the left half reversed so the anchor comes first), and joins half
solutions; the join adds one turn whenever both halves leave the anchor in
the same vertical direction, which makes the anchor itself an extremum.

Results always span at least two points; a bare anchor is never reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np

from ._backend import NUMBA_ENABLED, maybe_jit
from .core import ANY, MINUS, PLUS, turn_structure, validate_series
from .errors import IndexOutOfRange, NegativeTurns, TooLarge

_SIGNS = (PLUS, MINUS)
_NEG = -(1 << 20)  # "unreachable" sentinel; stays far below zero after +1 steps

BRUTE_FORCE_LIMIT = 18


def _ascending(sign_bit: int, t: int) -> bool:
    return (sign_bit == 0) == (t % 2 == 0)


@dataclass
class SubsequenceResult:
    """A witness path: strictly increasing indices into the original series."""

    indices: list[int]
    sign: Optional[str]
    turns: int
    length: int

    @classmethod
    def from_indices(cls, values: np.ndarray, indices) -> "SubsequenceResult":
        idx = [int(i) for i in indices]
        turns, sign, _ = turn_structure(values[idx])
        return cls(indices=idx, sign=sign, turns=turns, length=len(idx))


# --- table construction -------------------------------------------------


def _prefix_fill(h, max_turns):
    m = h.size
    best = np.zeros((2, m, max_turns + 1), np.int32)
    pred = np.full((2, m, max_turns + 1), -1, np.int32)
    best[0, 0, 0] = 1  # the start point alone, before any direction exists
    best[1, 0, 0] = 1
    for s in range(2):
        for t in range(max_turns + 1):
            asc = (s == 0) == (t % 2 == 0)
            for i in range(1, m):
                top = 0
                arg = -1
                for j in range(i):
                    if asc:
                        if h[i] <= h[j]:
                            continue
                    elif h[i] >= h[j]:
                        continue
                    cand = best[s, j, t]  # continue the current segment
                    if t >= 1 and best[s, j, t - 1] >= 2 and best[s, j, t - 1] > cand:
                        cand = best[s, j, t - 1]  # turn at j
                    if cand >= 1 and cand + 1 > top:
                        top = cand + 1
                        arg = j
                best[s, i, t] = top
                pred[s, i, t] = arg
    return best, pred


def _ext_fill(h, max_turns):
    m = h.size
    ext = np.full((2, max_turns + 1, m), _NEG, np.int32)
    for i in range(m - 1, -1, -1):
        for d in range(2):
            asc = d == 0
            for b in range(max_turns + 1):
                top = 0 if b == 0 else _NEG
                for j in range(i + 1, m):
                    if (h[j] > h[i]) == asc and h[j] != h[i]:
                        cand = 1 + ext[d, b, j]
                        if cand > top:
                            top = cand
                    elif b >= 1 and h[j] != h[i]:
                        cand = 1 + ext[1 - d, b - 1, j]
                        if cand > top:
                            top = cand
                ext[d, b, i] = top
    return ext


if NUMBA_ENABLED:
    _prefix_fill = maybe_jit(_prefix_fill)
    _ext_fill = maybe_jit(_ext_fill)
else:
    def _prefix_fill(h, max_turns):  # noqa: F811 - vectorized twin
        m = h.size
        best = np.zeros((2, m, max_turns + 1), np.int32)
        pred = np.full((2, m, max_turns + 1), -1, np.int32)
        best[:, 0, 0] = 1
        for s in range(2):
            for t in range(max_turns + 1):
                asc = (s == 0) == (t % 2 == 0)
                for i in range(1, m):
                    ok = h[:i] < h[i] if asc else h[:i] > h[i]
                    cand = best[s, :i, t].copy()
                    if t >= 1:
                        turned = best[s, :i, t - 1]
                        np.maximum(cand, np.where(turned >= 2, turned, 0), out=cand)
                    cand = np.where(ok & (cand >= 1), cand, 0)
                    j = int(np.argmax(cand))
                    if cand[j] >= 1:
                        best[s, i, t] = cand[j] + 1
                        pred[s, i, t] = j
        return best, pred

    def _ext_fill(h, max_turns):  # noqa: F811 - vectorized twin
        m = h.size
        ext = np.full((2, max_turns + 1, m), _NEG, np.int32)
        for i in range(m - 1, -1, -1):
            up = h[i + 1:] > h[i]
            down = h[i + 1:] < h[i]
            for d in range(2):
                cont, flip = (up, down) if d == 0 else (down, up)
                for b in range(max_turns + 1):
                    top = 0 if b == 0 else _NEG
                    if i + 1 < m:
                        top = max(top, 1 + int(np.max(ext[d, b, i + 1:], initial=_NEG, where=cont)))
                        if b >= 1:
                            top = max(top, 1 + int(np.max(ext[1 - d, b - 1, i + 1:], initial=_NEG, where=flip)))
                    ext[d, b, i] = top
        return ext


@dataclass
class DpTable:
    """Longest-path lengths from index 0, with predecessors.

    best[s][i][t] is the length of the longest subsequence starting at
    index 0 and ending at i in state (sign s, turns t); 0 marks an
    unreachable state and the [s][0][0] entries hold the seed length 1 for
    the bare start point. pred mirrors best with the chosen predecessor.
    lengths[s][t] caches the best over all endpoints past the start.
    """

    best: np.ndarray
    pred: np.ndarray
    lengths: np.ndarray

    @classmethod
    def build(cls, values: np.ndarray, max_turns: int) -> "DpTable":
        best, pred = _prefix_fill(np.asarray(values, dtype=float), max_turns)
        if best.shape[1] < 2:
            lengths = np.zeros((2, max_turns + 1), np.int32)
        else:
            lengths = best[:, 1:, :].max(axis=1)
        return cls(best=best, pred=pred, lengths=lengths)

    def length(self, sign_bit: int, t: int) -> int:
        return int(self.lengths[sign_bit, t])

    def walk(self, sign_bit: int, i: int, t: int) -> list[int]:
        """Reconstruct one witness for state (sign, i, t) via predecessors."""
        if self.best[sign_bit, i, t] < 2:
            raise ValueError("state is not reachable")
        path = [i]
        while i != 0:
            j = int(self.pred[sign_bit, i, t])
            here = self.best[sign_bit, i, t]
            if self.best[sign_bit, j, t] + 1 == here:
                pass  # the segment continued through j
            elif t >= 1 and self.best[sign_bit, j, t - 1] + 1 == here:
                t -= 1  # the path turned at j
            else:  # pragma: no cover - table corruption guard
                raise RuntimeError("predecessor chain does not explain the length")
            path.append(j)
            i = j
        path.reverse()
        return path


def _lex_min_core(h, ext, sign_bit, turns, length):
    m = h.size
    path = np.empty(length, np.int64)
    path[0] = 0
    cur = 0
    asc = sign_bit == 0
    b = turns
    pos = 1
    need = length - 1
    while need > 0:
        nxt = -1
        for j in range(cur + 1, m):
            if h[j] != h[cur] and (h[j] > h[cur]) == asc and ext[0 if asc else 1, b, j] == need - 1:
                nxt = j
                break
            if (
                pos >= 2
                and b >= 1
                and h[j] != h[cur]
                and (h[j] > h[cur]) != asc
                and ext[1 if asc else 0, b - 1, j] == need - 1
            ):
                asc = not asc
                b -= 1
                nxt = j
                break
        if nxt < 0:
            return path[:0]
        path[pos] = nxt
        pos += 1
        cur = nxt
        need -= 1
    return path


if NUMBA_ENABLED:
    _lex_min_core = maybe_jit(_lex_min_core)


def _lex_min_path(h, ext, sign_bit: int, turns: int, length: int) -> list[int]:
    """Greedy forward walk: smallest feasible next index at every step."""
    out = _lex_min_core(h, ext, sign_bit, turns, length)
    if out.size != length:  # pragma: no cover - tables guarantee feasibility
        raise RuntimeError("reconstruction lost the optimum")
    return out.tolist()


# --- solvers -------------------------------------------------------------


def _sign_bits(sign) -> tuple[int, ...]:
    if sign is None or sign == ANY:
        return (0, 1)
    if sign == PLUS:
        return (0,)
    if sign == MINUS:
        return (1,)
    raise ValueError(f"sign must be '+', '-' or 'any', got {sign!r}")


def _check_turns(turns):
    if turns < 0:
        raise NegativeTurns("turn count must be nonnegative")


def lkts_from_start(s, turns: int, sign=ANY, at_most: bool = False) -> Optional[SubsequenceResult]:
    """Longest subsequence starting at index 0 with exactly `turns` turns.

    With at_most=True any turn count up to `turns` qualifies. Ties go to
    the lexicographically smallest index sequence.
    """
    _check_turns(turns)
    values = validate_series(s)
    if values.size < 2:
        return None
    table = DpTable.build(values, turns)
    ext = _ext_fill(values, turns)
    budgets = range(turns + 1) if at_most else (turns,)
    candidates = []
    for sb in _sign_bits(sign):
        for t in budgets:
            length = table.length(sb, t)
            if length >= 2:
                candidates.append((length, sb, t))
    if not candidates:
        return None
    top = max(length for length, _, _ in candidates)
    best = None
    for length, sb, t in candidates:
        if length != top:
            continue
        path = _lex_min_path(values, ext, sb, t, top)
        if best is None or path < best[0]:
            best = (path, sb, t)
    path, sb, t = best
    return SubsequenceResult(indices=path, sign=_SIGNS[sb], turns=t, length=top)


@dataclass
class _HalfOption:
    length: int
    sign_bit: Optional[int]  # None for the bare anchor
    turns: int


def _half_options(values: np.ndarray, max_turns: int):
    """Every realizable (length, sign, turns) of a from-anchor path in one half."""
    options = [_HalfOption(1, None, 0)]
    if values.size >= 2:
        table = DpTable.build(values, max_turns)
        ext = _ext_fill(values, max_turns)
        for sb in (0, 1):
            for t in range(max_turns + 1):
                length = table.length(sb, t)
                if length >= 2:
                    options.append(_HalfOption(length, sb, t))
    else:
        ext = None
    return options, ext


def lkts_through(s, anchor: int, turns: int, sign=ANY, at_most: bool = False) -> Optional[SubsequenceResult]:
    """Longest subsequence passing through `anchor` with exactly `turns` turns.

    The series is split at the anchor; the left part is reversed so both
    halves start there. Joining costs one extra turn when both halves leave
    the anchor in the same vertical direction (the anchor becomes an
    extremum). anchor=0 degenerates to lkts_from_start.
    """
    _check_turns(turns)
    values = validate_series(s)
    if not 0 <= anchor < values.size:
        raise IndexOutOfRange(f"anchor {anchor} outside 0..{values.size - 1}")
    left = values[anchor::-1]
    right = values[anchor:]
    left_opts, left_ext = _half_options(left, turns)
    right_opts, right_ext = _half_options(right, turns)
    want = _sign_bits(sign)

    combos = []
    for lo in left_opts:
        for ro in right_opts:
            joined = 1 if lo.sign_bit is not None and ro.sign_bit is not None and lo.sign_bit == ro.sign_bit else 0
            total = lo.turns + ro.turns + joined
            if total > turns or (not at_most and total != turns):
                continue
            length = lo.length + ro.length - 1
            if length < 2:
                continue
            if lo.sign_bit is not None:
                # forward, the path enters the anchor against the left
                # half's arrival direction
                first_ascends = not _ascending(lo.sign_bit, lo.turns)
            else:
                first_ascends = _ascending(ro.sign_bit, 0)
            realized = 0 if first_ascends else 1
            if realized not in want:
                continue
            combos.append((length, lo, ro, realized, total))
    if not combos:
        return None
    top = max(c[0] for c in combos)

    def forward_indices(lo: _HalfOption, ro: _HalfOption) -> list[int]:
        lpath = [0] if lo.sign_bit is None else _lex_min_path(left, left_ext, lo.sign_bit, lo.turns, lo.length)
        rpath = [0] if ro.sign_bit is None else _lex_min_path(right, right_ext, ro.sign_bit, ro.turns, ro.length)
        return [anchor - i for i in reversed(lpath)] + [anchor + j for j in rpath[1:]]

    best = None
    for length, lo, ro, realized, total in combos:
        if length != top:
            continue
        fwd = forward_indices(lo, ro)
        if best is None or fwd < best[0]:
            best = (fwd, realized, total)
    witness, realized, total = best
    return SubsequenceResult(indices=witness, sign=_SIGNS[realized], turns=total, length=top)


def brute_force_lkts(s, turns: int, anchor: Optional[int] = None) -> Optional[SubsequenceResult]:
    """Exhaustive reference solver for small inputs (n <= 18)."""
    _check_turns(turns)
    values = validate_series(s)
    n = values.size
    if n > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"brute force enumerates 2^n subsequences; n={n} exceeds {BRUTE_FORCE_LIMIT}")
    if anchor is not None and not 0 <= anchor < n:
        raise IndexOutOfRange(f"anchor {anchor} outside 0..{n - 1}")
    best: Optional[tuple[int, tuple]] = None
    for size in range(2, n + 1):
        for idx in combinations(range(n), size):
            if anchor is not None and anchor not in idx:
                continue
            t, _, strict = turn_structure(values[list(idx)])
            if not strict or t != turns:
                continue
            key = (-size, idx)
            if best is None or key < best:
                best = key
    if best is None:
        return None
    return SubsequenceResult.from_indices(values, list(best[1]))
