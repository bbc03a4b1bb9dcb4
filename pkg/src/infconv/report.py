"""Structured pass/fail evidence returned by every verifier."""
from __future__ import annotations

import dataclasses
import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .rational import INF, format_ext

HOLDS = "holds"
VIOLATED = "violated"
HYPOTHESIS_UNMET = "hypothesis-unmet"


@dataclass
class TheoremReport:
    """Outcome of one verification run.

    ``theorem`` names the statement checked; ``status`` is one of ``holds``,
    ``violated`` or ``hypothesis-unmet``. Witnesses and counterexamples are
    plain dicts whose values serialize through :func:`jsonable`.
    """

    theorem: str
    status: str = HOLDS
    checked: int = 0
    witnesses: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    def fail(self, **witness):
        self.status = VIOLATED
        self.counterexamples.append(witness)

    def expect(self, condition: bool, **witness) -> bool:
        self.checked += 1
        if not condition:
            self.fail(**witness)
        return condition

    def merge(self, other: "TheoremReport") -> "TheoremReport":
        """Concatenate evidence from a disjoint run of the same check."""
        self.checked += other.checked
        self.witnesses.extend(other.witnesses)
        self.counterexamples.extend(other.counterexamples)
        if other.status == HYPOTHESIS_UNMET or self.status == HYPOTHESIS_UNMET:
            self.status = HYPOTHESIS_UNMET
        elif other.status == VIOLATED:
            self.status = VIOLATED
        return self

    def to_json(self) -> dict:
        return jsonable(
            {
                "theorem": self.theorem,
                "status": self.status,
                "holds": self.holds,
                "checked": self.checked,
                "witnesses": self.witnesses,
                "counterexamples": self.counterexamples,
                "details": self.details,
            }
        )


def jsonable(obj: Any) -> Any:
    """Recursively turn Fractions, +inf, enums, dataclasses and function objects into JSON values."""
    if hasattr(obj, "to_json") and not isinstance(obj, type):
        return jsonable(obj.to_json())
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, enum.Enum):
        return getattr(obj, "label", obj.name)
    if isinstance(obj, Fraction):
        return format_ext(obj)
    if isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        if obj == INF:
            return "+inf"
        return obj
    if dataclasses.is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, frozenset, set)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in items]
    raise TypeError(f"cannot serialize {type(obj).__name__}")
