"""Katetov functions on a finite metric-invariant group.

A Katetov function ``f`` satisfies ``|f(x) - f(y)| <= d(x, y) <= f(x) + f(y)``;
it lists the distances from one new point added to the space.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import inf_conv
from .errors import InvariantViolation
from .fnspace import FnOnX, d_inf, is_katetov, kuratowski, random_katetov
from .magma import FiniteMetricMagma, validate_metric
from .monoid import _require_invariant_group, is_unit
from .rational import as_fraction
from .report import TheoremReport


@dataclass(frozen=True)
class SubspaceFn:
    """A Katetov function defined only on ``subset`` of a finite metric space.

    ``metric`` is the full distance table; pass ``M.metric`` for a magma.
    """

    metric: tuple
    subset: tuple[int, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self):
        metric = validate_metric(self.metric, len(self.metric))
        object.__setattr__(self, "metric", metric)
        subset = tuple(self.subset)
        if not subset:
            raise InvariantViolation("subset must be nonempty", "subset")
        if len(set(subset)) != len(subset) or any(not 0 <= y < self.n for y in subset):
            raise InvariantViolation(f"subset must list distinct indices in [0, {self.n})", "subset")
        if len(self.values) != len(subset):
            raise InvariantViolation(f"expected {len(subset)} values, got {len(self.values)}", "values")
        vals = tuple(as_fraction(v, f"values[{i}]") for i, v in enumerate(self.values))
        object.__setattr__(self, "subset", subset)
        object.__setattr__(self, "values", vals)
        d = metric
        for (i, y1), (j, y2) in itertools.combinations_with_replacement(enumerate(subset), 2):
            if not abs(vals[i] - vals[j]) <= d[y1][y2] <= vals[i] + vals[j]:
                raise InvariantViolation(
                    f"Katetov inequality fails between points {y1} and {y2}", f"values[{i}],values[{j}]"
                )

    @property
    def n(self) -> int:
        return len(self.metric)

    def as_dict(self) -> dict[int, Fraction]:
        return dict(zip(self.subset, self.values))


def katetov_extension(sf: SubspaceFn) -> FnOnX:
    """Greatest 1-Lipschitz extension ``x -> min over y in Y of f(y) + d(x, y)``."""
    d = sf.metric
    return FnOnX(tuple(min(v + d[x][y] for y, v in zip(sf.subset, sf.values)) for x in range(sf.n)))


def random_subspace_fn(M: FiniteMetricMagma, rng: random.Random, denominator: int = 4) -> SubspaceFn:
    """Random nonempty subset with a Katetov function on it, built as the restriction of a random Katetov function on M."""
    k = rng.randint(1, M.n)
    subset = tuple(sorted(rng.sample(range(M.n), k)))
    f = random_katetov(M, rng, denominator=denominator)
    return SubspaceFn(M.metric, subset, tuple(f[y] for y in subset))


def _require_katetov(M, **fs):
    for name, f in fs.items():
        if not is_katetov(M, f):
            raise InvariantViolation(f"{f!r} is not a Katetov function", name)


def katetov_closure_check(M: FiniteMetricMagma, f: FnOnX, g: FnOnX) -> TheoremReport:
    """The convolution of two Katetov functions is Katetov (both inequality chains)."""
    _require_invariant_group(M)
    _require_katetov(M, f=f, g=g)
    h = inf_conv(M, f, g)
    rep = TheoremReport("Katetov functions are closed under inf-convolution")
    d = M.metric
    for x1, x2 in itertools.combinations_with_replacement(range(M.n), 2):
        rep.expect(abs(h[x1] - h[x2]) <= d[x1][x2], lipschitz_fails=[x1, x2], conv=h)
        rep.expect(d[x1][x2] <= h[x1] + h[x2], lower_bound_fails=[x1, x2], conv=h)
    rep.witnesses.append({"convolution": h})
    return rep


def contraction_isometry_check(M: FiniteMetricMagma, f: FnOnX, g: FnOnX, h: FnOnX) -> TheoremReport:
    """Convolving by ``g`` is 1-Lipschitz for d_inf, and convolving by any ``d(x, .)`` is an isometry."""
    _require_invariant_group(M)
    _require_katetov(M, f=f, g=g, h=h)
    rep = TheoremReport("convolution is a d_inf contraction, translations are isometries")
    dfh = d_inf(f, h)
    right = d_inf(inf_conv(M, f, g), inf_conv(M, h, g))
    left = d_inf(inf_conv(M, g, f), inf_conv(M, g, h))
    rep.expect(right <= dfh, part="a", side="right", lhs=right, rhs=dfh)
    rep.expect(left <= dfh, part="a", side="left", lhs=left, rhs=dfh)
    for x in range(M.n):
        dx = kuratowski(M, x)
        lhs = d_inf(inf_conv(M, dx, f), inf_conv(M, dx, h))
        rhs = d_inf(inf_conv(M, f, dx), inf_conv(M, h, dx))
        rep.expect(lhs == dfh and rhs == dfh, part="b", x=x, left=lhs, right=rhs, expected=dfh)
    return rep


def eval_as_distance(M: FiniteMetricMagma, f: FnOnX, x: int) -> Fraction:
    """``d_inf(f, d(x, .))``, which for a Katetov ``f`` is exactly ``f(x)``."""
    _require_katetov(M, f=f)
    value = d_inf(f, kuratowski(M, x))
    if value != f[x]:
        raise AssertionError(f"d_inf(f, gamma({x})) = {value} but f({x}) = {f[x]}")
    return value


def katetov_units(M: FiniteMetricMagma, shifts: Sequence = (Fraction(1, 2), 1)) -> TheoremReport:
    """Units of the Katetov monoid are exactly the Kuratowski functions.

    Every ``d(x, .)`` must invert to ``d(x^-1, .)``, and for each positive
    shift ``c`` the function ``d(y, .) + c`` must fail: its only possible
    inverse ``d(y^-1, .) - c`` is not Katetov.
    """
    _require_invariant_group(M)
    rep = TheoremReport("units of the Katetov monoid are the Kuratowski functions")
    e = kuratowski(M, M.identity)
    for x in range(M.n):
        dx = kuratowski(M, x)
        inv = kuratowski(M, M.inverse(x))
        cert = is_unit(M, dx)
        ok = cert is not None and cert.inverse == inv and is_katetov(M, dx) and is_katetov(M, inv)
        ok = ok and inf_conv(M, dx, inv) == e and inf_conv(M, inv, dx) == e
        rep.expect(ok, not_a_unit=x)
        rep.witnesses.append({"unit": x, "inverse": M.inverse(x)})
    for y in range(M.n):
        for c in shifts:
            c = Fraction(c)
            f = kuratowski(M, y).shift(c)
            cert = is_unit(M, f)
            # a unit of the larger Lipschitz monoid, but its inverse leaves the Katetov set
            rep.expect(
                cert is not None and not is_katetov(M, cert.inverse),
                shifted_unit=y,
                shift=c,
                inverse=cert.inverse if cert else None,
            )
    rep.details["unit_group_order"] = M.n
    return rep


def extension_dominates(sf: SubspaceFn, g: FnOnX) -> bool:
    """True when ``g`` is a 1-Lipschitz extension of ``sf`` lying below its Katetov extension."""
    ext = katetov_extension(sf)
    d, r = sf.metric, range(sf.n)
    lip = len(g) == sf.n and g.is_finite and all(abs(g[x] - g[y]) <= d[x][y] for x in r for y in r)
    if not lip or any(g[y] != v for y, v in zip(sf.subset, sf.values)):
        raise InvariantViolation("g is not a 1-Lipschitz extension of the subspace function", "g")
    return g.pointwise_le(ext)


def random_lipschitz_extension(sf: SubspaceFn, rng: random.Random, denominator: int = 8) -> FnOnX:
    """A random 1-Lipschitz function agreeing with ``sf`` on its subset.

    Points outside the subset are filled one by one with a random value in
    the interval left open by the points already assigned.
    """
    d = sf.metric
    vals: dict[int, Fraction] = sf.as_dict()
    rest = [x for x in range(sf.n) if x not in vals]
    rng.shuffle(rest)
    for x in rest:
        lo = max(v - d[x][y] for y, v in vals.items())
        hi = min(v + d[x][y] for y, v in vals.items())
        steps = int((hi - lo) * denominator)
        vals[x] = lo + Fraction(rng.randint(0, steps), denominator) if steps > 0 else lo
    return FnOnX(tuple(vals[x] for x in range(sf.n)))
