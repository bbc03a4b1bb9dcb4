"""Min-plus sequence monoids on Z/pZ and on Z, both with the discrete metric.

Members of these monoids (``in_linf_dis``) are nonnegative sequences whose
values differ pairwise by at most 1. The Kuratowski element ``delta(k)`` is 0
at ``k`` and 1 elsewhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantViolation
from .kernels import convex_minplus_merge, naive_minplus, smawk_minplus
from .rational import as_fraction, format_ext


@dataclass(frozen=True)
class CyclicSeq:
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.values:
            raise InvariantViolation("period must be positive", "values")
        object.__setattr__(self, "values", tuple(as_fraction(v, f"values[{i}]") for i, v in enumerate(self.values)))

    @classmethod
    def delta(cls, p: int, k: int) -> "CyclicSeq":
        return cls(tuple(Fraction(int(i != k % p)) for i in range(p)))

    @property
    def p(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i % self.p]

    def in_linf_dis(self) -> bool:
        return min(self.values) >= 0 and max(self.values) - min(self.values) <= 1

    def to_json(self):
        return {"n": self.p, "values": [format_ext(v) for v in self.values]}


def cyclic_minplus(u: CyclicSeq, v: CyclicSeq, mode: str = "naive") -> CyclicSeq:
    """``w[n] = min over k of u[n - k] + v[k]`` with indices mod p.

    ``naive`` is the O(p^2) double loop. ``merge`` (both operands convex as
    sequences on ``0..p-1``) and ``smawk`` (``v`` convex) compute the linear
    convolution and fold it: ``w[n] = min(c[n], c[n + p])``.
    """
    if u.p != v.p:
        raise InvariantViolation(f"periods differ: {u.p} vs {v.p}")
    p = u.p
    if mode == "naive":
        return CyclicSeq(tuple(min(u[n - k] + v[k] for k in range(p)) for n in range(p)))
    if mode == "merge":
        c = convex_minplus_merge(u.values, v.values)
    elif mode == "smawk":
        c = smawk_minplus(u.values, v.values)
    elif mode == "linear-naive":
        c = naive_minplus(u.values, v.values)
    else:
        raise InvariantViolation(f"unknown mode {mode!r}", "mode")
    return CyclicSeq(tuple(min(c[n], c[n + p]) if n + p < len(c) else c[n] for n in range(p)))


@dataclass(frozen=True)
class CofiniteSeq:
    """A sequence on Z equal to ``default`` outside finitely many ``exceptions``.

    Exceptions are stored sorted and never repeat the default value.
    """

    default: Fraction
    exceptions: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self):
        default = as_fraction(self.default, "default")
        items = dict(self.exceptions)
        clean = {}
        for k, v in items.items():
            if isinstance(k, bool) or not isinstance(k, int):
                raise InvariantViolation(f"index {k!r} is not an integer", "values")
            v = as_fraction(v, f"values[{k}]")
            if v != default:
                clean[k] = v
        object.__setattr__(self, "default", default)
        object.__setattr__(self, "exceptions", tuple(sorted(clean.items())))

    @classmethod
    def delta(cls, k: int) -> "CofiniteSeq":
        return cls(Fraction(1), ((k, Fraction(0)),))

    @classmethod
    def constant(cls, c) -> "CofiniteSeq":
        return cls(as_fraction(c))

    def __getitem__(self, n: int) -> Fraction:
        return dict(self.exceptions).get(n, self.default)

    def support(self) -> list[int]:
        return [k for k, _ in self.exceptions]

    def in_linf_dis(self) -> bool:
        vals = [self.default, *(v for _, v in self.exceptions)]
        return min(vals) >= 0 and max(vals) - min(vals) <= 1

    def to_json(self):
        return {
            "default": format_ext(self.default),
            "values": {str(k): format_ext(v) for k, v in self.exceptions},
        }


def z_minplus(u: CofiniteSeq, v: CofiniteSeq) -> CofiniteSeq:
    """``w[n] = inf over k in Z of u[n - k] + v[k]``, exactly.

    Far from every exception the candidates are ``du + dv``, ``du + v[k]``
    for exceptional ``k`` and ``u[j] + dv`` for exceptional ``j``, so the
    infimum is attained and the result is again cofinite. Only indices
    ``j + k`` with both ``j`` and ``k`` exceptional can differ from that
    generic value.
    """
    for name, s in (("u", u), ("v", v)):
        if not s.in_linf_dis():
            raise InvariantViolation("sequence is not nonnegative with oscillation <= 1", name)
    du, dv = u.default, v.default
    ue, ve = dict(u.exceptions), dict(v.exceptions)
    generic = min([du + dv, *(du + x for x in ve.values()), *(x + dv for x in ue.values())])
    out = {}
    for j in ue:
        for k in ve:
            n = j + k
            if n in out:
                continue
            # du + dv is always available: pick k far from every exception
            cands = [du + dv]
            cands += [u[n - kk] + vv for kk, vv in ve.items()]
            cands += [uu + v[n - jj] for jj, uu in ue.items()]
            out[n] = min(cands)
    return CofiniteSeq(generic, tuple(out.items()))
