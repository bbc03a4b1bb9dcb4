"""The inf-convolution engine on a finite magma and the strong-minimum equivalence check."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .errors import InvariantViolation
from .fnspace import FnOnX, strong_min
from .magma import FiniteMetricMagma, d_invariance_at
from .rational import INF, ExtValue
from .report import HOLDS, HYPOTHESIS_UNMET, VIOLATED


def _check_carrier(M, *fs):
    for f in fs:
        if len(f) != M.n:
            raise InvariantViolation(f"function has {len(f)} values on a carrier of size {M.n}")


def inf_conv(M: FiniteMetricMagma, f: FnOnX, g: FnOnX) -> FnOnX:
    """``x -> min over y*z = x of f(y) + g(z)``, +inf on an empty fiber."""
    _check_carrier(M, f, g)
    fv, gv = f.values, g.values
    out = []
    for pairs in M.fibers:
        best = INF
        for y, z in pairs:
            s = fv[y] + gv[z]
            if s < best:
                best = s
        out.append(best)
    return FnOnX(tuple(out))


@dataclass(frozen=True)
class AttainmentReport:
    target: int
    value: ExtValue
    minimizing_pairs: tuple[tuple[int, int], ...]

    @property
    def strongly_attained(self) -> bool:
        return len(self.minimizing_pairs) == 1

    def to_json(self):
        return {
            "target": self.target,
            "value": self.value,
            "minimizing_pairs": [list(p) for p in self.minimizing_pairs],
            "strongly_attained": self.strongly_attained,
        }


def attainment(M: FiniteMetricMagma, f: FnOnX, g: FnOnX, a: int) -> AttainmentReport:
    """All pairs of the fiber over ``a`` at which ``f(y) + g(z)`` reaches ``(f (+) g)(a)``; ties are kept."""
    _check_carrier(M, f, g)
    pairs = M.fibers[a]
    if not pairs:
        return AttainmentReport(a, INF, ())
    sums = [(f[y] + g[z], (y, z)) for y, z in pairs]
    value = min(s for s, _ in sums)
    return AttainmentReport(a, value, tuple(p for s, p in sums if s == value))


@dataclass
class Fond0Report:
    """Both sides of the strong-minimum equivalence for one pair ``(f, g)``.

    ``direction_I`` is the strong minimizer of the convolution,
    ``direction_II`` the pair of strong minimizers of ``f`` and ``g``.
    Consequence flags are None when neither side holds.
    """

    direction_I: Optional[int]
    direction_II: Optional[tuple[int, int]]
    equivalence_holds: bool
    consequence1_holds: Optional[bool] = None
    consequence2_holds: Optional[bool] = None
    status: str = HOLDS
    invariance: dict = field(default_factory=dict)
    counterexample: Optional[dict] = None
    convolution: Optional[FnOnX] = None

    def to_json(self):
        return {
            "theorem": "strong minimum of f (+) g <=> strong minima of f and g",
            "status": self.status,
            "direction_I": self.direction_I,
            "direction_II": list(self.direction_II) if self.direction_II else None,
            "equivalence_holds": self.equivalence_holds,
            "consequence1_holds": self.consequence1_holds,
            "consequence2_holds": self.consequence2_holds,
            "invariance": self.invariance,
            "counterexample": self.counterexample,
            "convolution": self.convolution,
        }


def verify_fond0(M: FiniteMetricMagma, f: FnOnX, g: FnOnX) -> Fond0Report:
    """Compute both sides of the equivalence and, when they hold, its two consequences.

    ``status`` is ``hypothesis-unmet`` when the law is not d-invariant at a
    candidate point (the report is still filled in, nothing is concluded),
    ``violated`` when the equivalence or a consequence fails on an instance
    that meets the hypothesis, and ``holds`` otherwise.
    """
    _check_carrier(M, f, g)
    if not (f.is_finite and g.is_finite):
        raise InvariantViolation("verify_fond0 needs finite-valued functions")
    h = inf_conv(M, f, g)
    a = strong_min(h)
    ys, zs = strong_min(f), strong_min(g)
    pair = (ys, zs) if ys is not None and zs is not None else None

    equivalent = (a is None) == (pair is None)
    if equivalent and pair is not None:
        equivalent = M.op(*pair) == a

    candidates = {c for c in (a, M.op(*pair) if pair else None) if c is not None}
    invariance = {c: d_invariance_at(M, c) for c in sorted(candidates)}
    hypothesis_ok = all(v is not None for v in invariance.values())

    rep = Fond0Report(
        direction_I=a,
        direction_II=pair,
        equivalence_holds=equivalent,
        invariance={str(c): (v.as_tuple() if v else None) for c, v in invariance.items()},
        convolution=h,
    )
    if equivalent and pair is not None:
        yt, zt = pair
        att = attainment(M, f, g, a)
        rep.consequence1_holds = att.minimizing_pairs == (pair,)
        ha = h[a]
        bad = None
        for x in range(M.n):
            if f[x] - f[yt] < h[M.op(x, zt)] - ha:
                bad = {"x": x, "side": "f", "lhs": f[x] - f[yt], "rhs": h[M.op(x, zt)] - ha}
                break
            if g[x] - g[zt] < h[M.op(yt, x)] - ha:
                bad = {"x": x, "side": "g", "lhs": g[x] - g[zt], "rhs": h[M.op(yt, x)] - ha}
                break
        rep.consequence2_holds = bad is None
        if not rep.consequence1_holds:
            rep.counterexample = {"consequence": 1, "minimizing_pairs": [list(p) for p in att.minimizing_pairs]}
        elif bad is not None:
            rep.counterexample = {"consequence": 2, **bad}
    elif not equivalent:
        rep.counterexample = {"f": f, "g": g, "convolution": h, "direction_I": a, "direction_II": pair}

    ok = equivalent and rep.consequence1_holds is not False and rep.consequence2_holds is not False
    if not hypothesis_ok:
        rep.status = HYPOTHESIS_UNMET
    elif not ok:
        rep.status = VIOLATED
    return rep


AssocTree = Union[int, tuple]


def n_fold_conv(M: FiniteMetricMagma, fs: Sequence[FnOnX], order: Union[str, AssocTree] = "left") -> FnOnX:
    """Fold ``inf_conv`` over ``fs`` along a parenthesization.

    ``order`` is ``"left"``, ``"right"``, or a nested 2-tuple tree whose leaves
    index into ``fs``, e.g. ``((0, 1), 2)``.
    """
    if not fs:
        raise InvariantViolation("n_fold_conv needs at least one function")
    if order == "left":
        acc = fs[0]
        for f in fs[1:]:
            acc = inf_conv(M, acc, f)
        return acc
    if order == "right":
        acc = fs[-1]
        for f in reversed(fs[:-1]):
            acc = inf_conv(M, f, acc)
        return acc

    def walk(node):
        if isinstance(node, int):
            return fs[node]
        left, right = node
        return inf_conv(M, walk(left), walk(right))

    return walk(order)
