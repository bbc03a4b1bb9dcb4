"""Convex Katetov functions on the real line, held exactly as piecewise-linear data.

Such a function is convex and 1-Lipschitz with asymptotic slopes -1 and +1,
so it is determined by its finitely many breakpoints ``(x_i, v_i)``. Left of
the first breakpoint it has slope -1, right of the last slope +1.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvariantViolation
from .rational import as_fraction, format_ext
from .report import TheoremReport

ONE = Fraction(1)


@dataclass(frozen=True)
class PLKatetovFn:
    """Canonical breakpoint list of a convex Katetov function on the line.

    Construction accepts any strictly increasing points whose slopes are
    nondecreasing inside ``[-1, 1]``, then drops redundant points (equal
    slopes on both sides, end segments with slope exactly -1 or +1).
    The Katetov condition ``c_plus + c_minus >= 0`` is enforced.
    """

    breakpoints: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        pts = [
            (as_fraction(x, f"breakpoints[{i}][0]"), as_fraction(v, f"breakpoints[{i}][1]"))
            for i, (x, v) in enumerate(self.breakpoints)
        ]
        if not pts:
            raise InvariantViolation("need at least one breakpoint", "breakpoints")
        for i in range(len(pts) - 1):
            if pts[i + 1][0] <= pts[i][0]:
                raise InvariantViolation("abscissae must be strictly increasing", f"breakpoints[{i + 1}]")
        slopes = [-ONE]
        slopes += [(pts[i + 1][1] - pts[i][1]) / (pts[i + 1][0] - pts[i][0]) for i in range(len(pts) - 1)]
        slopes.append(ONE)
        for i in range(len(slopes) - 1):
            if slopes[i + 1] < slopes[i]:
                where = f"breakpoints[{i}]" if i < len(pts) else "breakpoints"
                raise InvariantViolation(
                    f"slopes must be nondecreasing within [-1, 1]: {slopes[i]} then {slopes[i + 1]}", where
                )
        canon = tuple(p for i, p in enumerate(pts) if slopes[i] != slopes[i + 1])
        object.__setattr__(self, "breakpoints", canon)
        if self.c_plus + self.c_minus < 0:
            raise InvariantViolation(
                f"not Katetov: intercepts {self.c_plus} + {self.c_minus} < 0", "breakpoints"
            )

    @classmethod
    def gamma(cls, x=0) -> "PLKatetovFn":
        """``t -> |t - x|``."""
        return cls(((as_fraction(x), Fraction(0)),))

    @classmethod
    def abs_plus(cls, c, x=0) -> "PLKatetovFn":
        """``t -> |t - x| + c``."""
        return cls(((as_fraction(x), as_fraction(c)),))

    @property
    def c_plus(self) -> Fraction:
        """``f(t) = t + c_plus`` for large t."""
        x, v = self.breakpoints[-1]
        return v - x

    @property
    def c_minus(self) -> Fraction:
        """``f(t) = -t + c_minus`` for very negative t."""
        x, v = self.breakpoints[0]
        return v + x

    def __call__(self, t) -> Fraction:
        t = as_fraction(t)
        pts = self.breakpoints
        if t <= pts[0][0]:
            return pts[0][1] + (pts[0][0] - t)
        if t >= pts[-1][0]:
            return pts[-1][1] + (t - pts[-1][0])
        lo, hi = 0, len(pts) - 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if pts[mid][0] <= t:
                lo = mid
            else:
                hi = mid
        (x0, v0), (x1, v1) = pts[lo], pts[hi]
        return v0 + (v1 - v0) * (t - x0) / (x1 - x0)

    def segments(self) -> list[tuple[Fraction, Fraction]]:
        """Interior pieces as ``(length, slope)``, slopes strictly increasing."""
        pts = self.breakpoints
        return [
            (pts[i + 1][0] - pts[i][0], (pts[i + 1][1] - pts[i][1]) / (pts[i + 1][0] - pts[i][0]))
            for i in range(len(pts) - 1)
        ]

    def slopes(self) -> set[Fraction]:
        return {s for _, s in self.segments()}

    def minimum(self) -> Fraction:
        return min(v for _, v in self.breakpoints)

    def to_json(self):
        return {"breakpoints": [[format_ext(x), format_ext(v)] for x, v in self.breakpoints]}

    def __repr__(self):
        body = ", ".join(f"({format_ext(x)}, {format_ext(v)})" for x, v in self.breakpoints)
        return f"PLKatetovFn({body})"


def gamma(x=0) -> PLKatetovFn:
    return PLKatetovFn.gamma(x)


def pl_infconv(f: PLKatetovFn, g: PLKatetovFn) -> PLKatetovFn:
    """Inf-convolution by Minkowski sum of epigraphs.

    The leftmost vertices add, and the interior pieces of both functions
    are laid end to end in order of increasing slope.
    """
    (xf, vf), (xg, vg) = f.breakpoints[0], g.breakpoints[0]
    sf, sg = f.segments(), g.segments()
    merged = []
    i = j = 0
    while i < len(sf) and j < len(sg):
        if sf[i][1] <= sg[j][1]:
            merged.append(sf[i])
            i += 1
        else:
            merged.append(sg[j])
            j += 1
    merged += sf[i:] + sg[j:]
    x, v = xf + xg, vf + vg
    pts = [(x, v)]
    for length, slope in merged:
        x, v = x + length, v + slope * length
        pts.append((x, v))
    return PLKatetovFn(tuple(pts))


def epi_scale(lam, f: PLKatetovFn) -> PLKatetovFn:
    """``t -> lam f(t / lam)`` for ``lam > 0``; ``|t|`` for ``lam == 0``."""
    lam = as_fraction(lam)
    if lam < 0:
        raise InvariantViolation("negative scalars are only defined on Kuratowski elements", "lambda")
    if lam == 0:
        return gamma(0)
    return PLKatetovFn(tuple((lam * x, lam * v) for x, v in f.breakpoints))


def pl_dinf(f: PLKatetovFn, g: PLKatetovFn) -> Fraction:
    """Sup of ``|f - g|``.

    The difference is piecewise linear with kinks only at breakpoints of
    either function and constant beyond them (both tails share slopes), so
    the sup is attained at a breakpoint or equals a tail constant.
    """
    ts = {x for x, _ in f.breakpoints} | {x for x, _ in g.breakpoints}
    best = max(abs(f(t) - g(t)) for t in ts)
    return max(best, abs(f.c_plus - g.c_plus), abs(f.c_minus - g.c_minus))


def signed_scale_kuratowski(lam, x) -> PLKatetovFn:
    """``lam * gamma(x)`` for any sign of ``lam``, with ``lam * gamma(x) = (-lam) * gamma(-x)`` when ``lam < 0``."""
    lam, x = as_fraction(lam), as_fraction(x)
    if lam < 0:
        return epi_scale(-lam, gamma(-x))
    return epi_scale(lam, gamma(x))


def norm_kuratowski(f: PLKatetovFn) -> Fraction:
    """``d_inf(f, gamma(0))`` for a Kuratowski element ``f = gamma(x)``; equals ``|x|``."""
    if len(f.breakpoints) != 1 or f.breakpoints[0][1] != 0:
        raise InvariantViolation(f"{f!r} is not a Kuratowski element |t - x|", "f")
    return pl_dinf(f, gamma(0))


def banach_on_kuratowski(lam, x) -> tuple[PLKatetovFn, Fraction]:
    """``(lam * gamma(x), norm of gamma(x))``."""
    return signed_scale_kuratowski(lam, x), norm_kuratowski(gamma(x))


def verify_cone_axioms(samples: Sequence[PLKatetovFn], scalars: Sequence) -> TheoremReport:
    """Exact check of the three convex-cone axioms on every sample and scalar pair.

    ``1 * c = c``, ``0 * c = |t|``; ``(a + b) * c = (a * c) (+) (b * c)``;
    ``l * (c (+) c') = (l * c) (+) (l * c')`` with ``c'`` the next sample.
    """
    rep = TheoremReport("epi-scaling and inf-convolution make a convex cone")
    scalars = [as_fraction(s) for s in scalars]
    e = gamma(0)
    for idx, c in enumerate(samples):
        rep.expect(epi_scale(1, c) == c, axiom=1, sample=c)
        rep.expect(epi_scale(0, c) == e, axiom=1, sample=c)
        rep.expect(pl_infconv(e, c) == c and pl_infconv(c, e) == c, identity_fails=c)
        c2 = samples[(idx + 1) % len(samples)]
        for a in scalars:
            for b in scalars:
                lhs = epi_scale(a + b, c)
                rhs = pl_infconv(epi_scale(a, c), epi_scale(b, c))
                rep.expect(lhs == rhs, axiom=2, alpha=a, beta=b, sample=c, lhs=lhs, rhs=rhs)
            lhs = epi_scale(a, pl_infconv(c, c2))
            rhs = pl_infconv(epi_scale(a, c), epi_scale(a, c2))
            rep.expect(lhs == rhs, axiom=3, lam=a, samples=[c, c2], lhs=lhs, rhs=rhs)
    return rep


@dataclass
class FixedPointResult:
    solution: PLKatetovFn
    iterations: int
    residual: Fraction
    trace: list = field(default_factory=list)
    slopes_stable: bool = True

    def to_json(self):
        return {
            "solution": self.solution,
            "iterations": self.iterations,
            "residual": self.residual,
            "trace": self.trace,
            "slopes_stable": self.slopes_stable,
        }


def fixed_point_solve(lam, g: PLKatetovFn, tol, max_iter: int = 10_000) -> FixedPointResult:
    """Iterate ``f -> (lam * f) (+) g`` from ``|t|`` until the step is at most ``tol (1 - lam)``.

    The map is a ``lam``-contraction for ``pl_dinf``, so the stopping rule
    keeps the returned iterate within ``lam * tol`` of the unique fixed
    point. ``trace`` lists the step sizes.
    """
    lam, tol = as_fraction(lam), as_fraction(tol)
    if not 0 < lam < 1:
        raise InvariantViolation("lambda must lie in (0, 1)", "lambda")
    if tol <= 0:
        raise InvariantViolation("tolerance must be positive", "tol")
    f = gamma(0)
    trace = []
    stable = True
    for k in range(1, max_iter + 1):
        nxt = pl_infconv(epi_scale(lam, f), g)
        stable &= nxt.slopes() <= (f.slopes() | g.slopes())
        step = pl_dinf(nxt, f)
        trace.append(step)
        f = nxt
        if step <= tol * (1 - lam):
            break
    else:
        raise RuntimeError(f"no convergence after {max_iter} iterations")
    residual = pl_dinf(pl_infconv(epi_scale(lam, f), g), f)
    return FixedPointResult(f, k, residual, trace, stable)


def reflect(f: PLKatetovFn) -> PLKatetovFn:
    """``t -> f(-t)``."""
    return PLKatetovFn(tuple((-x, v) for x, v in reversed(f.breakpoints)))


def verify_cone_iso(T: str, samples: Sequence[PLKatetovFn], scalars: Iterable) -> TheoremReport:
    """``f -> f o T^-1`` for ``T`` the identity or ``t -> -t``: cone morphism and isometry checks."""
    if T not in ("identity", "reflection"):
        raise InvariantViolation("T must be 'identity' or 'reflection'", "T")
    phi = (lambda f: f) if T == "identity" else reflect
    scalars = [as_fraction(s) for s in scalars]
    rep = TheoremReport("f -> f o T^-1 is an isometric convex-cone isomorphism")
    for x in (Fraction(0), Fraction(2), Fraction(-7, 3)):
        want = gamma(x if T == "identity" else -x)
        rep.expect(phi(gamma(x)) == want, kuratowski_image_fails_at=x)
    for f in samples:
        for g in samples:
            rep.expect(phi(pl_infconv(f, g)) == pl_infconv(phi(f), phi(g)), not_multiplicative=[f, g])
            rep.expect(pl_dinf(phi(f), phi(g)) == pl_dinf(f, g), not_isometric=[f, g])
        for lam in scalars:
            rep.expect(phi(epi_scale(lam, f)) == epi_scale(lam, phi(f)), not_homogeneous=f, lam=lam)
    return rep


def random_pl_katetov(rng: random.Random, max_breaks: int = 5, denominator: int = 8) -> PLKatetovFn:
    """Seeded random canonical function: distinct sorted interior slopes, random lengths and offset."""

    def q(lo, hi):
        return Fraction(rng.randint(lo * denominator, hi * denominator), denominator)

    k = rng.randint(0, max_breaks - 1)
    slopes = sorted({Fraction(rng.randint(-denominator + 1, denominator - 1), denominator) for _ in range(k)})
    x, v = q(-4, 4), q(0, 3)
    pts = [(x, v)]
    for s in slopes:
        length = Fraction(rng.randint(1, 4 * denominator), denominator)
        x, v = x + length, v + s * length
        pts.append((x, v))
    x0, v0 = pts[0]
    xl, vl = pts[-1]
    deficit = (vl - xl) + (v0 + x0)
    if deficit < 0:
        lift = -deficit / 2 + q(0, 1)
        pts = [(x, v + lift) for x, v in pts]
    return PLKatetovFn(tuple(pts))
