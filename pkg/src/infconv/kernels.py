"""Linear min-plus convolution kernels.

``c[k] = min over i + j = k of a[i] + b[j]`` for finite sequences, output
length ``len(a) + len(b) - 1``. The kernels are generic over exact number
types (int, Fraction); the benchmark feeds them scaled integers.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate
from typing import Sequence

import numpy as np

from .errors import InvariantViolation


def is_convex(seq: Sequence) -> bool:
    """Nonnegative second differences."""
    return all(seq[i - 1] + seq[i + 1] >= 2 * seq[i] for i in range(1, len(seq) - 1))


def _nonempty(a, b):
    if not len(a) or not len(b):
        raise InvariantViolation("min-plus convolution of an empty sequence")


def naive_minplus(a: Sequence, b: Sequence) -> list:
    """Reference double loop, O(len(a) * len(b))."""
    _nonempty(a, b)
    out = [None] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            s = ai + bj
            k = i + j
            if out[k] is None or s < out[k]:
                out[k] = s
    return out


def naive_minplus_numpy(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """The same double loop with the inner minimum vectorized; integer arrays only."""
    a = np.asarray(a)
    b = np.asarray(b)
    n, m = len(a), len(b)
    rb = b[::-1]
    out = np.empty(n + m - 1, dtype=np.result_type(a, b))
    for k in range(n + m - 1):
        i0, i1 = max(0, k - m + 1), min(k, n - 1)
        off = m - 1 - k
        out[k] = (a[i0 : i1 + 1] + rb[off + i0 : off + i1 + 1]).min()
    return out


def convex_minplus_merge(a: Sequence, b: Sequence, counter: dict | None = None) -> list:
    """Min-plus convolution of two convex sequences in O(len(a) + len(b)).

    The result is convex, starts at ``a[0] + b[0]``, and its first
    differences are the sorted merge of the first differences of ``a`` and
    ``b``.
    """
    _nonempty(a, b)
    if not is_convex(a):
        raise InvariantViolation("first operand is not convex", "a")
    if not is_convex(b):
        raise InvariantViolation("second operand is not convex", "b")
    da = [a[i + 1] - a[i] for i in range(len(a) - 1)]
    db = [b[i + 1] - b[i] for i in range(len(b) - 1)]
    merged = []
    i = j = 0
    while i < len(da) and j < len(db):
        if da[i] <= db[j]:
            merged.append(da[i])
            i += 1
        else:
            merged.append(db[j])
            j += 1
    merged.extend(da[i:])
    merged.extend(db[j:])
    if counter is not None:
        counter["steps"] = counter.get("steps", 0) + len(merged)
    return list(accumulate(merged, initial=a[0] + b[0]))


def smawk_row_minima(rows: list, cols: list, lookup) -> dict:
    """Leftmost row minima of a totally monotone implicit matrix.

    ``lookup(r, c)`` gives the entry; the leftmost minimum column must be
    nondecreasing down the rows, as it is for any Monge matrix.
    """
    result: dict = {}

    def solve(rows, cols):
        if not rows:
            return
        # reduce to at most len(rows) candidate columns
        stack: list = []
        for c in cols:
            while stack:
                r = rows[len(stack) - 1]
                if lookup(r, stack[-1]) <= lookup(r, c):
                    break
                stack.pop()
            if len(stack) < len(rows):
                stack.append(c)
        cols = stack
        solve(rows[1::2], cols)
        # interpolate the even rows between their odd neighbours
        j = 0
        for i in range(0, len(rows), 2):
            r = rows[i]
            stop = result[rows[i + 1]] if i + 1 < len(rows) else cols[-1]
            best, best_val = cols[j], lookup(r, cols[j])
            while cols[j] != stop:
                j += 1
                v = lookup(r, cols[j])
                if v < best_val:
                    best, best_val = cols[j], v
            result[r] = best

    solve(list(rows), list(cols))
    return result


def smawk_minplus(a: Sequence, b: Sequence, counter: dict | None = None) -> list:
    """Min-plus convolution with a convex ``b`` and arbitrary ``a`` in O(len(a) + len(b)).

    Row ``k`` of the matrix ``a[j] + b[k - j]`` is Monge once ``b`` is
    extended past its ends with slopes steep enough that out-of-range
    entries can never be minimal.
    """
    _nonempty(a, b)
    if not is_convex(b):
        raise InvariantViolation("second operand is not convex", "b")
    n, m = len(a), len(b)
    spread_b = max(b) - min(b)
    steep = max(abs(b[i + 1] - b[i]) for i in range(m - 1)) if m > 1 else 0
    penalty = (max(a) - min(a)) + spread_b + steep + 1
    b0, blast = b[0], b[m - 1]
    calls = 0

    def lookup(k, j):
        nonlocal calls
        calls += 1
        t = k - j
        if t < 0:
            return a[j] + b0 - t * penalty
        if t >= m:
            return a[j] + blast + (t - m + 1) * penalty
        return a[j] + b[t]

    rows = list(range(n + m - 1))
    argmins = smawk_row_minima(rows, list(range(n)), lookup)
    out = []
    for k in rows:
        j = argmins[k]
        if not 0 <= k - j < m:
            raise AssertionError(f"row {k} minimum landed outside the band")
        out.append(a[j] + b[k - j])
    if counter is not None:
        counter["lookups"] = counter.get("lookups", 0) + calls
    return out


# -- benchmark ------------------------------------------------------------------

MODES = ("naive", "convex-merge", "smawk")


def _random_convex(rng: random.Random, n: int, scale: int) -> list[int]:
    diffs = sorted(rng.randint(-scale, scale) for _ in range(n - 1))
    return list(accumulate(diffs, initial=rng.randint(-scale, scale)))


def synth_instance(n: int, mode: str, rng: random.Random, scale: int = 64) -> tuple[list[int], list[int]]:
    """Integer instance for ``mode``: both operands convex for the merge kernel, one for SMAWK."""
    b = _random_convex(rng, n, scale)
    if mode == "convex-merge":
        a = _random_convex(rng, n, scale)
    else:
        a = [rng.randint(-scale * 4, scale * 4) for _ in range(n)]
    return a, b


@dataclass
class BenchReport:
    n: int
    mode: str
    seed: int
    denominator: int
    seconds: float
    ops: int
    naive_seconds: float
    naive_ops: int
    speedup: float
    outputs_equal: bool
    exact_indices_checked: int
    exact_ok: bool
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.outputs_equal and self.exact_ok

    def to_json(self):
        from dataclasses import asdict

        return {**asdict(self), "ok": self.ok}


def bench_minplus(n: int, mode: str, seed: int = 0, denominator: int = 8, exact_samples: int = 16) -> BenchReport:
    """Time one kernel against the vectorized double loop on a synthesized instance.

    Values are rationals with a common ``denominator`` held as scaled
    integers in the hot path. Correctness is checked twice: the full output
    against the double loop, and ``exact_samples`` entries recomputed from
    scratch in Fraction arithmetic.
    """
    if n < 1:
        raise InvariantViolation("n must be >= 1", "n")
    if mode not in MODES:
        raise InvariantViolation(f"mode must be one of {MODES}", "mode")
    rng = random.Random(seed)
    a, b = synth_instance(n, mode, rng)

    t0 = time.perf_counter()
    ref = naive_minplus_numpy(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
    naive_seconds = time.perf_counter() - t0
    naive_ops = n * n

    counter: dict = {}
    t0 = time.perf_counter()
    if mode == "naive":
        out = [int(v) for v in ref]
        ops = naive_ops
    elif mode == "convex-merge":
        out = convex_minplus_merge(a, b, counter)
        ops = counter["steps"]
    else:
        out = smawk_minplus(a, b, counter)
        ops = counter["lookups"]
    seconds = naive_seconds if mode == "naive" else time.perf_counter() - t0

    outputs_equal = [int(v) for v in ref] == list(out)
    fa = [Fraction(v, denominator) for v in a]
    fb = [Fraction(v, denominator) for v in b]
    k_total = 2 * n - 1
    picks = sorted({0, k_total - 1, *rng.sample(range(k_total), min(exact_samples, k_total))})
    exact_ok = True
    for k in picks:
        want = min(fa[i] + fb[k - i] for i in range(max(0, k - n + 1), min(k, n - 1) + 1))
        exact_ok &= Fraction(out[k], denominator) == want

    speedup = naive_seconds / seconds if seconds > 0 else float("inf")
    return BenchReport(
        n=n,
        mode=mode,
        seed=seed,
        denominator=denominator,
        seconds=seconds,
        ops=ops,
        naive_seconds=naive_seconds,
        naive_ops=naive_ops,
        speedup=speedup,
        outputs_equal=outputs_equal,
        exact_indices_checked=len(picks),
        exact_ok=exact_ok,
    )
