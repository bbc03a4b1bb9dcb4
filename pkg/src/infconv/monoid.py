"""Monoid and unit-group audits for inf-convolution over Lipschitz function spaces."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .core import inf_conv
from .errors import HypothesisUnmet, InvariantViolation
from .fnspace import (
    FnOnX,
    d_inf,
    grid_functions,
    is_katetov,
    is_lip1,
    is_positive,
    kuratowski,
    random_katetov,
    strong_min,
)
from .magma import FiniteMetricMagma, MagmaClass, classify_magma, group_hom_check
from .report import HYPOTHESIS_UNMET, TheoremReport


def _require_invariant_group(M: FiniteMetricMagma):
    if not M.is_group:
        raise HypothesisUnmet(f"carrier is a {classify_magma(M).label}, a group is required", "law")
    if not M.is_metric_invariant:
        raise HypothesisUnmet("metric is not invariant under translations", "metric")


@dataclass(frozen=True)
class UnitCertificate:
    """``f = d(base, .) + shift`` with the verified inverse ``d(base^-1, .) - shift``."""

    base: int
    shift: Fraction
    inverse: FnOnX

    def to_json(self):
        return {"base": self.base, "shift": self.shift, "inverse": self.inverse}


def is_unit(M: FiniteMetricMagma, f: FnOnX, positive: bool = False) -> Optional[UnitCertificate]:
    """Certificate that ``f`` is invertible for inf-convolution, or None.

    Detection is canonical-form matching: ``f - d(y, .)`` must be constant for
    some ``y``. The inverse is then built and its product re-convolved. With
    ``positive=True`` both ``f`` and its inverse must stay nonnegative, which
    leaves exactly the shift 0.
    """
    _require_invariant_group(M)
    if len(f) != M.n or not f.is_finite:
        return None
    e = M.identity
    identity = kuratowski(M, e)
    for y in range(M.n):
        c = f[y]
        dy = M.metric[y]
        if any(f[x] - dy[x] != c for x in range(M.n)):
            continue
        inverse = kuratowski(M, M.inverse(y)).shift(-c)
        if positive and not (is_positive(f) and is_positive(inverse)):
            return None
        # never certify without recomputing both products
        if inf_conv(M, f, inverse) != identity or inf_conv(M, inverse, f) != identity:
            raise AssertionError(f"canonical unit {f!r} failed to invert")
        return UnitCertificate(y, c, inverse)
    return None


def kuratowski_closure(M: FiniteMetricMagma) -> TheoremReport:
    """Check ``d(a,.) (+) d(b,.) = d(ab,.)`` for every pair.

    Also records whether the image of the carrier is closed under
    convolution, whether the induced table is Latin, and one pair on which
    the convolution fails to commute, if there is one.
    """
    rep = TheoremReport("kuratowski image is an isomorphic copy of the law")
    if not M.is_metric_invariant:
        rep.status = HYPOTHESIS_UNMET
        rep.details["reason"] = "metric is not invariant"
        return rep
    gam = [kuratowski(M, a) for a in range(M.n)]
    index = {g: a for a, g in enumerate(gam)}
    table = [[None] * M.n for _ in range(M.n)]
    for a, b in itertools.product(range(M.n), repeat=2):
        prod = inf_conv(M, gam[a], gam[b])
        table[a][b] = index.get(prod)
        rep.expect(prod == gam[M.op(a, b)], a=a, b=b, product=prod, expected=gam[M.op(a, b)])
    closed = all(v is not None for row in table for v in row)
    rep.details["closed"] = closed
    rep.details["law_is_latin"] = M.is_latin
    if closed:
        hat = FiniteMetricMagma(tuple(map(tuple, table)), M.metric)
        rep.details["image_is_latin"] = hat.is_latin
        # closure plus Latin image must give back a Latin law
        rep.expect(hat.is_latin == M.is_latin, reason="Latin property differs between law and image")
    for a, b in itertools.combinations(range(M.n), 2):
        if table[a][b] != table[b][a]:
            rep.details["noncommuting_pair"] = [a, b]
            break
    return rep


def identity_test_family(M: FiniteMetricMagma, grid=(0, Fraction(1, 2), 1), extra: Iterable[FnOnX] = ()) -> list[FnOnX]:
    """Kuratowski functions shifted over ``grid``, all grid-valued nonnegative 1-Lipschitz functions when n <= 4, and ``extra``."""
    fam = [kuratowski(M, x).shift(c) for x in range(M.n) for c in grid]
    if M.n <= 4:
        fam += [f for f in grid_functions(M.n, grid) if is_lip1(M, f) and is_positive(f)]
    fam += list(extra)
    return fam


def verify_int2(M: FiniteMetricMagma, extra: Iterable[FnOnX] = ()) -> TheoremReport:
    """Monoid check for inf-convolution on nonnegative 1-Lipschitz functions.

    On a group: ``d(e, .)`` must be a two-sided identity on a generated family
    and convolution of Kuratowski triples must associate. On a quasigroup
    that is not a group the check is expected to fail, and every
    non-associating Kuratowski triple is listed as a counterexample.
    """
    rep = TheoremReport("nonnegative 1-Lipschitz functions form a monoid iff the law is a group")
    cls = classify_magma(M)
    rep.details["class"] = cls.label
    if cls < MagmaClass.QUASIGROUP or not M.is_metric_invariant:
        rep.status = HYPOTHESIS_UNMET
        rep.details["reason"] = "needs a metric-invariant quasigroup"
        return rep
    gam = [kuratowski(M, a) for a in range(M.n)]
    for a, b, c in itertools.product(range(M.n), repeat=3):
        left = inf_conv(M, inf_conv(M, gam[a], gam[b]), gam[c])
        right = inf_conv(M, gam[a], inf_conv(M, gam[b], gam[c]))
        rep.expect(left == right, triple=[a, b, c], left=left, right=right)
    if M.is_group:
        ident = gam[M.identity]
        fam = identity_test_family(M, extra=extra)
        for f in fam:
            rep.expect(inf_conv(M, ident, f) == f and inf_conv(M, f, ident) == f, identity_failed_on=f)
        rep.details["identity"] = M.identity
        rep.details["identity_family_size"] = len(fam)
        if M.is_commutative:
            for f, g in itertools.combinations(fam[: 4 * M.n], 2):
                rep.expect(inf_conv(M, f, g) == inf_conv(M, g, f), noncommuting=[f, g])
    rep.details["consistent_with_theorem"] = rep.holds == M.is_group
    return rep


@dataclass
class MorphismReport:
    pairs_checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_json(self):
        return {
            "theorem": "argmin is a monoid morphism onto the carrier",
            "holds": self.holds,
            "pairs_checked": self.pairs_checked,
            "violations": self.violations,
        }


def argmin_morphism(
    M: FiniteMetricMagma,
    f: FnOnX,
    g: FnOnX,
    hom: Optional[tuple[FiniteMetricMagma, Sequence[int]]] = None,
) -> MorphismReport:
    """Check ``argmin(f (+) g) = argmin(f) * argmin(g)`` and ``argmin(d(x, .)) = x`` for all x.

    With ``hom=(H, h)`` the composite ``h o argmin`` is checked as well, for a
    homomorphism ``h`` given as a list of indices into ``H``.
    """
    _require_invariant_group(M)
    xf, xg = strong_min(f), strong_min(g)
    if xf is None or xg is None:
        raise InvariantViolation("both functions need a strong minimum", "f" if xf is None else "g")
    rep = MorphismReport()
    xh = strong_min(inf_conv(M, f, g))
    rep.pairs_checked += 1
    if xh != M.op(xf, xg):
        rep.violations.append({"f": f, "g": g, "argmin_conv": xh, "product": M.op(xf, xg)})
    for x in range(M.n):
        if strong_min(kuratowski(M, x)) != x:
            rep.violations.append({"diagram_fails_at": x})
    if hom is not None:
        H, h = hom
        if not group_hom_check(M, H, h):
            raise InvariantViolation("map is not a group homomorphism", "hom")
        if xh is None or h[xh] != H.op(h[xf], h[xg]):
            rep.violations.append({"character": list(h), "argmin_conv": xh, "argmin_f": xf, "argmin_g": xg})
    return rep


def argmin_sweep(M: FiniteMetricMagma, functions: Sequence[FnOnX]) -> MorphismReport:
    """All ordered pairs from ``functions`` (each must have a strong minimum)."""
    _require_invariant_group(M)
    mins = [strong_min(f) for f in functions]
    if any(m is None for m in mins):
        raise InvariantViolation("every function needs a strong minimum")
    rep = MorphismReport()
    for (f, xf), (g, xg) in itertools.product(zip(functions, mins), repeat=2):
        rep.pairs_checked += 1
        xh = strong_min(inf_conv(M, f, g))
        if xh != M.op(xf, xg):
            rep.violations.append({"f": f, "g": g, "argmin_conv": xh, "product": M.op(xf, xg)})
    return rep


def _check_group_isometry(M1, M2, T):
    n = M1.n
    if M2.n != n or sorted(T) != list(range(n)):
        raise InvariantViolation("map is not a bijection between the carriers", "T")
    for a, b in itertools.product(range(n), repeat=2):
        if T[M1.op(a, b)] != M2.op(T[a], T[b]):
            raise InvariantViolation(f"not a homomorphism at ({a}, {b})", "T")
        if M1.d(a, b) != M2.d(T[a], T[b]):
            raise InvariantViolation(f"not an isometry at ({a}, {b})", "T")


def canonical_iso(
    M1: FiniteMetricMagma,
    M2: FiniteMetricMagma,
    T: Sequence[int],
    suite: Iterable[FnOnX] = (),
    seed: int = 0,
    random_count: int = 8,
) -> tuple[Callable[[FnOnX], FnOnX], TheoremReport]:
    """Build ``f -> f o T^-1`` and check it is an isometric monoid map on a test suite.

    The suite always contains every Kuratowski function plus ``random_count``
    seeded Katetov functions; ``suite`` adds more.
    """
    _require_invariant_group(M1)
    _require_invariant_group(M2)
    T = list(T)
    _check_group_isometry(M1, M2, T)
    Tinv = [0] * len(T)
    for x, t in enumerate(T):
        Tinv[t] = x

    def phi(f: FnOnX) -> FnOnX:
        return FnOnX(tuple(f[Tinv[y]] for y in range(M2.n)))

    rng = random.Random(seed)
    fam = [kuratowski(M1, x) for x in range(M1.n)]
    fam += [random_katetov(M1, rng) for _ in range(random_count)]
    fam += list(suite)
    rep = TheoremReport("f -> f o T^-1 is an isometric monoid isomorphism")
    for x in range(M1.n):
        rep.expect(phi(kuratowski(M1, x)) == kuratowski(M2, T[x]), kuratowski_image_fails_at=x)
    for f, g in itertools.product(fam, repeat=2):
        rep.expect(phi(inf_conv(M1, f, g)) == inf_conv(M2, phi(f), phi(g)), not_multiplicative=[f, g])
        rep.expect(d_inf(phi(f), phi(g)) == d_inf(f, g), not_isometric=[f, g])
    for f in fam:
        if is_katetov(M1, f):
            rep.expect(is_katetov(M2, phi(f)), katetov_not_preserved=f)
    rep.details["suite_size"] = len(fam)
    return phi, rep


def cancellation_search(
    M: FiniteMetricMagma, value_grid, predicate: Optional[Callable[[FiniteMetricMagma, FnOnX], bool]] = None
) -> Optional[tuple[FnOnX, FnOnX, FnOnX]]:
    """First ``(f, h, g)`` with ``f != h`` and ``f (+) g == h (+) g`` among grid-valued functions.

    Functions are filtered by ``predicate`` (1-Lipschitz by default) and
    scanned in lexicographic order, ``g`` outermost.
    """
    predicate = predicate or is_lip1
    fam = [f for f in grid_functions(M.n, value_grid) if predicate(M, f)]
    for g in fam:
        seen: dict[FnOnX, FnOnX] = {}
        for f in fam:
            prod = inf_conv(M, f, g)
            if prod in seen:
                first = seen[prod]
                assert first != f and inf_conv(M, first, g) == inf_conv(M, f, g)
                return first, f, g
            seen[prod] = f
    return None


def factorization_witness(M: FiniteMetricMagma, f: FnOnX, a: int, b: int) -> tuple[FnOnX, FnOnX, TheoremReport]:
    """Explicit factorization ``f = phi (+) psi`` realizing ``phi(a) + psi(b) = f(ab)``.

    ``phi = f (+) d(b^-1, .)`` and ``psi = d(b, .)``. The report also checks every
    other Kuratowski split ``(f (+) d(c^-1, .), d(c, .))`` gives a value
    ``>= f(ab)``, and the translation identity ``f (+) d(c, .) = f(. c^-1)``.
    """
    _require_invariant_group(M)
    if not is_katetov(M, f):
        raise InvariantViolation(f"{f!r} is not a Katetov function", "f")
    inv = M.inverse
    phi = inf_conv(M, f, kuratowski(M, inv(b)))
    psi = kuratowski(M, b)
    target = f[M.op(a, b)]
    rep = TheoremReport("f(ab) is the infimum of phi(a) + psi(b) over factorizations of f")
    rep.expect(inf_conv(M, phi, psi) == f, factorization_fails=[phi, psi])
    rep.expect(phi[a] + psi[b] == target, witness_value=phi[a] + psi[b], target=target)
    rep.expect(is_katetov(M, phi) and is_katetov(M, psi), factor_not_katetov=[phi, psi])
    for c in range(M.n):
        phi_c = inf_conv(M, f, kuratowski(M, inv(c)))
        psi_c = kuratowski(M, c)
        rep.expect(inf_conv(M, phi_c, psi_c) == f, split=c, reason="not a factorization")
        rep.expect(phi_c[a] + psi_c[b] >= target, split=c, value=phi_c[a] + psi_c[b], target=target)
        translated = FnOnX(tuple(f[M.op(x, inv(c))] for x in range(M.n)))
        rep.expect(inf_conv(M, f, kuratowski(M, c)) == translated, translation_fails_at=c)
    rep.witnesses.append({"phi": phi, "psi": psi, "value": target})
    return phi, psi, rep
