"""Finite carriers with a binary law and a rational metric.

Elements are the indices ``0..n-1``. The law is a full ``n x n`` table and the
metric a symmetric table of Fractions; both are validated on construction.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

from .errors import InvariantViolation
from .rational import as_fraction


class MagmaClass(enum.IntEnum):
    """Algebraic labels ordered from coarsest to finest."""

    MAGMA = 0
    QUASIGROUP = 1
    LOOP = 2
    GROUP = 3
    ABELIAN_GROUP = 4

    @property
    def label(self) -> str:
        return {
            MagmaClass.MAGMA: "Magma",
            MagmaClass.QUASIGROUP: "Quasigroup",
            MagmaClass.LOOP: "Loop",
            MagmaClass.GROUP: "Group",
            MagmaClass.ABELIAN_GROUP: "AbelianGroup",
        }[self]


def validate_metric(metric: Sequence[Sequence], n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Return the metric as a tuple-of-tuples of Fractions, or raise InvariantViolation."""
    if len(metric) != n:
        raise InvariantViolation(f"expected {n} rows, got {len(metric)}", "metric")
    rows = []
    for i, row in enumerate(metric):
        if len(row) != n:
            raise InvariantViolation(f"expected {n} entries, got {len(row)}", f"metric[{i}]")
        rows.append(tuple(as_fraction(v, f"metric[{i}][{j}]") for j, v in enumerate(row)))
    d = tuple(rows)
    for i in range(n):
        if d[i][i] != 0:
            raise InvariantViolation("diagonal entry must be 0", f"metric[{i}][{i}]")
        for j in range(n):
            if d[i][j] != d[j][i]:
                raise InvariantViolation(f"not symmetric with metric[{j}][{i}]", f"metric[{i}][{j}]")
            if i != j and d[i][j] <= 0:
                raise InvariantViolation("off-diagonal distance must be positive", f"metric[{i}][{j}]")
    for i, j, k in itertools.product(range(n), repeat=3):
        if d[i][k] > d[i][j] + d[j][k]:
            raise InvariantViolation(
                f"triangle inequality fails through {j}: {d[i][k]} > {d[i][j]} + {d[j][k]}",
                f"metric[{i}][{k}]",
            )
    return d


def discrete_metric(n: int) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(int(i != j)) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class FiberSet:
    """All factorizations ``y*z = target`` together with their coordinate projections."""

    target: int
    pairs: tuple[tuple[int, int], ...]
    proj1: frozenset[int]
    proj2: frozenset[int]

    def __len__(self):
        return len(self.pairs)


@dataclass(frozen=True)
class InvarianceConstants:
    """Tightest two-sided Lipschitz constants of the law on one fiber.

    ``left_*`` bound ``d(y1*z, y2*z) / d(y1, y2)`` over the first projection,
    ``right_*`` bound ``d(y*z1, y*z2) / d(z1, z2)`` over the second.
    """

    left_upper: Fraction
    left_lower: Fraction
    right_upper: Fraction
    right_lower: Fraction

    def as_tuple(self):
        return (self.left_upper, self.left_lower, self.right_upper, self.right_lower)


@dataclass(frozen=True)
class FiniteMetricMagma:
    law: tuple[tuple[int, ...], ...]
    metric: tuple[tuple[Fraction, ...], ...]
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.law)
        if n == 0:
            raise InvariantViolation("carrier must be nonempty", "n")
        law = []
        for i, row in enumerate(self.law):
            if len(row) != n:
                raise InvariantViolation(f"expected {n} entries, got {len(row)}", f"law[{i}]")
            for j, v in enumerate(row):
                if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                    raise InvariantViolation(f"entry {v!r} is not an index in [0, {n})", f"law[{i}][{j}]")
            law.append(tuple(row))
        object.__setattr__(self, "law", tuple(law))
        object.__setattr__(self, "metric", validate_metric(self.metric, n))
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != n or len(set(labels)) != n:
                raise InvariantViolation(f"need {n} distinct labels", "labels")
            object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return len(self.law)

    def op(self, y: int, z: int) -> int:
        return self.law[y][z]

    def d(self, a: int, b: int) -> Fraction:
        return self.metric[a][b]

    def __len__(self):
        return len(self.law)

    # -- fibers ---------------------------------------------------------------

    @cached_property
    def fibers(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """``fibers[x]`` lists every ``(y, z)`` with ``y*z == x``, in row-major order."""
        out = [[] for _ in range(self.n)]
        for y, row in enumerate(self.law):
            for z, x in enumerate(row):
                out[x].append((y, z))
        return tuple(tuple(p) for p in out)

    def fiber(self, x: int) -> FiberSet:
        pairs = self.fibers[x]
        return FiberSet(
            target=x,
            pairs=pairs,
            proj1=frozenset(y for y, _ in pairs),
            proj2=frozenset(z for _, z in pairs),
        )

    # -- algebraic predicates -------------------------------------------------

    @cached_property
    def is_latin(self) -> bool:
        full = set(range(self.n))
        rows_ok = all(set(row) == full for row in self.law)
        cols_ok = all({self.law[y][z] for y in range(self.n)} == full for z in range(self.n))
        return rows_ok and cols_ok

    @cached_property
    def identity(self) -> Optional[int]:
        """The two-sided identity element, if any."""
        for e in range(self.n):
            if all(self.law[e][b] == b and self.law[b][e] == b for b in range(self.n)):
                return e
        return None

    @cached_property
    def is_associative(self) -> bool:
        L = self.law
        r = range(self.n)
        return all(L[L[a][b]][c] == L[a][L[b][c]] for a in r for b in r for c in r)

    @cached_property
    def is_commutative(self) -> bool:
        return all(self.law[a][b] == self.law[b][a] for a in range(self.n) for b in range(a))

    @cached_property
    def is_group(self) -> bool:
        return self.is_latin and self.identity is not None and self.is_associative

    def inverse(self, x: int) -> int:
        """Inverse of ``x`` in a group carrier."""
        if not self.is_group:
            raise InvariantViolation("inverse requires a group law", "law")
        e = self.identity
        return self.law[x].index(e)

    @cached_property
    def is_metric_invariant(self) -> bool:
        return check_metric_invariance(self)


def check_metric_invariance(M: FiniteMetricMagma) -> bool:
    """True iff every left and right translation is an isometry."""
    L, d, r = M.law, M.metric, range(M.n)
    for x in r:
        for y in r:
            for z in range(y):
                dyz = d[y][z]
                if d[L[x][y]][L[x][z]] != dyz or d[L[y][x]][L[z][x]] != dyz:
                    return False
    return True


def classify_magma(M: FiniteMetricMagma) -> MagmaClass:
    if not M.is_latin:
        return MagmaClass.MAGMA
    if M.identity is None:
        return MagmaClass.QUASIGROUP
    if not M.is_associative:
        return MagmaClass.LOOP
    return MagmaClass.ABELIAN_GROUP if M.is_commutative else MagmaClass.GROUP


def delta_fiber(M: FiniteMetricMagma, x: int) -> FiberSet:
    return M.fiber(x)


def _ratio_bounds(ratios):
    ratios = list(ratios)
    if not ratios:
        # no distinct pairs on this side: the inequalities are vacuous
        return Fraction(1), Fraction(1)
    return max(ratios), min(ratios)


def d_invariance_at(M: FiniteMetricMagma, x: int) -> Optional[InvarianceConstants]:
    """Tightest constants making the law d-invariant at ``x``.

    Returns None when the fiber over ``x`` is empty or when a lower constant
    would have to be 0 (two distinct points collapse under a translation).
    A side with fewer than two points imposes nothing and reports 1.
    """
    fib = M.fiber(x)
    if not fib.pairs:
        return None
    L, d = M.law, M.metric
    p1, p2 = sorted(fib.proj1), sorted(fib.proj2)
    left = (
        d[L[y1][z]][L[y2][z]] / d[y1][y2]
        for y1, y2 in itertools.combinations(p1, 2)
        for z in p2
    )
    right = (
        d[L[y][z1]][L[y][z2]] / d[z1][z2]
        for z1, z2 in itertools.combinations(p2, 2)
        for y in p1
    )
    lu, ll = _ratio_bounds(left)
    ru, rl = _ratio_bounds(right)
    if ll <= 0 or rl <= 0:
        return None
    return InvarianceConstants(lu, ll, ru, rl)


# -- standard carriers ---------------------------------------------------------


def cyclic_group(n: int, metric=None) -> FiniteMetricMagma:
    """Z/nZ under addition; discrete metric unless one is given."""
    law = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteMetricMagma(law, metric if metric is not None else discrete_metric(n))


def cyclic_distance(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Shortest-path distance on the n-cycle; translation invariant for Z/nZ."""
    return tuple(
        tuple(Fraction(min((i - j) % n, (j - i) % n)) for j in range(n)) for i in range(n)
    )


def subtraction_quasigroup(n: int) -> FiniteMetricMagma:
    """``a*b = a - b mod n``: a quasigroup with right identity 0 and no two-sided identity (n > 2)."""
    law = tuple(tuple((a - b) % n for b in range(n)) for a in range(n))
    return FiniteMetricMagma(law, discrete_metric(n))


def left_projection(n: int) -> FiniteMetricMagma:
    """``a*b = a``: the simplest law whose left translations collapse."""
    law = tuple(tuple(a for _ in range(n)) for a in range(n))
    return FiniteMetricMagma(law, discrete_metric(n))


def dihedral_group(k: int) -> FiniteMetricMagma:
    """Dihedral group of order 2k, elements ``r^i`` at ``i`` and ``s r^i`` at ``k + i``."""

    def decode(x):
        return (x // k, x % k)

    def mul(a, b):
        (fa, ra), (fb, rb) = decode(a), decode(b)
        # r^ra s^fb = s^fb r^(+-ra)
        r = ((-ra if fb else ra) + rb) % k
        return ((fa ^ fb) * k) + r

    n = 2 * k
    law = tuple(tuple(mul(a, b) for b in range(n)) for a in range(n))
    return FiniteMetricMagma(law, discrete_metric(n))


# smallest loop that is not a group (identity 0, order 5)
_LOOP5 = (
    (0, 1, 2, 3, 4),
    (1, 0, 3, 4, 2),
    (2, 4, 0, 1, 3),
    (3, 2, 4, 0, 1),
    (4, 3, 1, 2, 0),
)


def nonassociative_loop5() -> FiniteMetricMagma:
    return FiniteMetricMagma(_LOOP5, discrete_metric(5))


def group_hom_check(M: FiniteMetricMagma, H: FiniteMetricMagma, h: Sequence[int]) -> bool:
    """True iff ``h`` (a list of indices into H) is a homomorphism M -> H."""
    r = range(M.n)
    return len(h) == M.n and all(h[M.op(a, b)] == H.op(h[a], h[b]) for a in r for b in r)
