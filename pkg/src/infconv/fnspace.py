"""Extended-rational functions on a finite carrier and the metrics between them."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import InvariantViolation
from .magma import FiniteMetricMagma
from .rational import INF, ExtValue, as_ext, format_ext


@dataclass(frozen=True)
class FnOnX:
    """A function ``{0..n-1} -> Q u {+inf}`` with at least one finite value."""

    values: tuple

    def __post_init__(self):
        vals = tuple(as_ext(v, f"values[{i}]") for i, v in enumerate(self.values))
        if not vals:
            raise InvariantViolation("function on an empty carrier", "values")
        if all(v == INF for v in vals):
            raise InvariantViolation("function has empty domain (all values +inf)", "values")
        object.__setattr__(self, "values", vals)

    @classmethod
    def of(cls, *values) -> "FnOnX":
        return cls(tuple(values))

    @classmethod
    def constant(cls, n: int, c) -> "FnOnX":
        return cls((c,) * n)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __repr__(self):
        return "FnOnX(" + ", ".join(format_ext(v) for v in self.values) + ")"

    @property
    def is_finite(self) -> bool:
        return INF not in self.values

    def shift(self, c) -> "FnOnX":
        c = Fraction(c)
        return FnOnX(tuple(v + c if v != INF else INF for v in self.values))

    def minimum(self) -> ExtValue:
        return min(self.values)

    def argmin(self) -> tuple[int, ...]:
        m = self.minimum()
        return tuple(i for i, v in enumerate(self.values) if v == m)

    def pointwise_le(self, other: "FnOnX") -> bool:
        return all(a <= b for a, b in zip(self.values, other.values))

    def to_json(self) -> dict:
        return {"n": len(self.values), "values": [format_ext(v) for v in self.values]}


def _require_finite(*fs):
    for f in fs:
        if not f.is_finite:
            raise InvariantViolation(f"expected a finite-valued function, got {f!r}")


def _require_same_carrier(f, g):
    if len(f) != len(g):
        raise InvariantViolation(f"carrier sizes differ: {len(f)} vs {len(g)}")


def kuratowski(M: FiniteMetricMagma, a: int) -> FnOnX:
    """The distance function ``t -> d(a, t)``."""
    return FnOnX(M.metric[a])


def is_lip1(M: FiniteMetricMagma, f: FnOnX) -> bool:
    if not f.is_finite:
        return False
    d, v, r = M.metric, f.values, range(M.n)
    return all(abs(v[x] - v[y]) <= d[x][y] for x in r for y in range(x))


def is_positive(f: FnOnX) -> bool:
    """Nonnegativity: every value ``>= 0``."""
    return all(v >= 0 for v in f.values)


def is_katetov(M: FiniteMetricMagma, f: FnOnX) -> bool:
    """``|f(x) - f(y)| <= d(x, y) <= f(x) + f(y)`` for all x, y (including x == y)."""
    if not f.is_finite:
        return False
    d, v, r = M.metric, f.values, range(M.n)
    if any(v[x] < 0 for x in r):
        return False
    return all(abs(v[x] - v[y]) <= d[x][y] <= v[x] + v[y] for x in r for y in range(x))


def d_inf(f: FnOnX, g: FnOnX) -> ExtValue:
    """Sup distance. A point where exactly one side is +inf makes it +inf."""
    _require_same_carrier(f, g)
    best = Fraction(0)
    for a, b in zip(f.values, g.values):
        if a == INF and b == INF:
            continue
        if a == INF or b == INF:
            return INF
        best = max(best, abs(a - b))
    return best


def rho(f: FnOnX, g: FnOnX) -> Fraction:
    """``sup |f-g| / (1 + |f-g|)``: a bounded metric equivalent to uniform convergence."""
    _require_same_carrier(f, g)
    _require_finite(f, g)
    return max(abs(a - b) / (1 + abs(a - b)) for a, b in zip(f.values, g.values))


def rho_tilde(f: FnOnX, g: FnOnX) -> Fraction:
    _require_same_carrier(f, g)
    _require_finite(f, g)
    mf, mg = f.minimum(), g.minimum()
    return rho(f.shift(-mf), g.shift(-mg)) + abs(mf - mg)


def strong_min(f: FnOnX) -> Optional[int]:
    """Index of the unique global minimizer, or None on ties.

    On a finite carrier uniqueness of the minimizer is the same thing as a
    strong minimum, since every minimizing sequence is eventually constant.
    """
    am = f.argmin()
    return am[0] if len(am) == 1 else None


def perturb_to_strong_min(M: FiniteMetricMagma, f: FnOnX, xstar: int, eps) -> FnOnX:
    """``(1 - eps) f + eps d(xstar, .)``: a 1-Lipschitz function with a unique minimum at ``xstar``.

    Since ``f_eps - f = eps (d(xstar, .) - f)``, the sup distance moved is
    exactly ``eps * d_inf(d(xstar, .), f)``.
    """
    eps = Fraction(eps)
    if not 0 < eps < 1:
        raise InvariantViolation(f"eps must lie in (0, 1), got {eps}", "eps")
    _require_finite(f)
    if xstar not in f.argmin():
        raise InvariantViolation(f"{xstar} is not a minimizer of {f!r}", "xstar")
    dx = M.metric[xstar]
    return FnOnX(tuple((1 - eps) * v + eps * dx[t] for t, v in enumerate(f.values)))


# -- generators ---------------------------------------------------------------


def grid_functions(n: int, grid: Iterable) -> Iterable[FnOnX]:
    """Every function with values drawn from ``grid``, in lexicographic order."""
    grid = [Fraction(g) for g in grid]
    for vals in itertools.product(grid, repeat=n):
        yield FnOnX(vals)


def lipschitz_envelope(M: FiniteMetricMagma, values) -> FnOnX:
    """Largest 1-Lipschitz function below ``values``: ``x -> min_y values[y] + d(x, y)``."""
    d, r = M.metric, range(M.n)
    return FnOnX(tuple(min(values[y] + d[x][y] for y in r) for x in r))


def random_lip1(M: FiniteMetricMagma, rng: random.Random, denominator: int = 4, spread: int = 3) -> FnOnX:
    """Seeded random 1-Lipschitz function (may take negative values)."""
    raw = [Fraction(rng.randint(-spread * denominator, spread * denominator), denominator) for _ in range(M.n)]
    return lipschitz_envelope(M, raw)


def random_katetov(M: FiniteMetricMagma, rng: random.Random, denominator: int = 4, spread: int = 2) -> FnOnX:
    """Seeded random Katetov function.

    Starts from ``d(a, .) + noise`` with nonnegative noise, which already
    satisfies ``v(x) + v(y) >= d(x, y)``, and takes its 1-Lipschitz envelope;
    the envelope keeps that lower inequality, so the result is Katetov.
    """
    a = rng.randrange(M.n)
    raw = [M.metric[a][x] + Fraction(rng.randint(0, spread * denominator), denominator) for x in range(M.n)]
    if rng.random() < 0.25:
        lift = Fraction(rng.randint(0, spread * denominator), denominator)
        raw = [v + lift for v in raw]
    f = lipschitz_envelope(M, raw)
    assert is_katetov(M, f)
    return f
