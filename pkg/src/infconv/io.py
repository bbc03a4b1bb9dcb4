"""JSON file formats. Rationals travel as strings ("3", "-2/5", "+inf")."""
from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

from .convexcone import PLKatetovFn
from .errors import ParseError
from .fnspace import FnOnX
from .katetov import SubspaceFn
from .magma import (
    FiniteMetricMagma,
    cyclic_group,
    dihedral_group,
    left_projection,
    nonassociative_loop5,
    subtraction_quasigroup,
)
from .rational import as_ext, as_fraction
from .report import jsonable
from .zline import CofiniteSeq, CyclicSeq


def dumps(obj: Any) -> str:
    """Canonical rendering: sorted keys, two-space indent, trailing newline."""
    return json.dumps(jsonable(obj), sort_keys=True, indent=2) + "\n"


def load_json(path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", str(path)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"{path}:{exc.lineno}:{exc.colno}") from None


def _field(obj, key, kind, where):
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object", where or "<root>")
    if key not in obj:
        raise ParseError("missing field", _join(where, key))
    val = obj[key]
    if kind is int and (isinstance(val, bool) or not isinstance(val, int)):
        raise ParseError(f"expected an integer, got {val!r}", _join(where, key))
    if kind is list and not isinstance(val, list):
        raise ParseError("expected a list", _join(where, key))
    if kind is dict and not isinstance(val, dict):
        raise ParseError("expected an object", _join(where, key))
    return val


def _join(where, key):
    return f"{where}.{key}" if where else key


def _matrix(rows, n, where, conv):
    if len(rows) != n:
        raise ParseError(f"expected {n} rows, got {len(rows)}", where)
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"expected a row of {n} entries", f"{where}[{i}]")
        out.append(tuple(conv(v, f"{where}[{i}][{j}]") for j, v in enumerate(row)))
    return tuple(out)


# -- magmas ----------------------------------------------------------------------

_BUILTIN = re.compile(r"^(cyclic|dihedral|subtraction|leftproj):(\d+)$|^loop5$")


def builtin_magma(name: str) -> FiniteMetricMagma:
    """``cyclic:n``, ``dihedral:k`` (order 2k), ``subtraction:n``, ``leftproj:n`` or ``loop5``, all with the discrete metric."""
    m = _BUILTIN.match(name)
    if not m:
        raise ParseError(f"unknown carrier {name!r}", "magma")
    if name == "loop5":
        return nonassociative_loop5()
    kind, k = m.group(1), int(m.group(2))
    if k < 1:
        raise ParseError("size must be positive", "magma")
    return {
        "cyclic": cyclic_group,
        "dihedral": dihedral_group,
        "subtraction": subtraction_quasigroup,
        "leftproj": left_projection,
    }[kind](k)


def magma_from_json(obj, where: str = "") -> FiniteMetricMagma:
    n = _field(obj, "n", int, where)
    if n < 1:
        raise ParseError("n must be positive", _join(where, "n"))
    labels = obj.get("labels")
    index = None
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
            raise ParseError("labels must be a list of strings", _join(where, "labels"))
        index = {s: i for i, s in enumerate(labels)}

    def entry(v, loc):
        if isinstance(v, str) and index is not None:
            if v not in index:
                raise ParseError(f"unknown label {v!r}", loc)
            return index[v]
        if isinstance(v, bool) or not isinstance(v, int):
            raise ParseError(f"expected an index, got {v!r}", loc)
        return v

    law = _matrix(_field(obj, "law", list, where), n, _join(where, "law"), entry)
    metric = _matrix(_field(obj, "metric", list, where), n, _join(where, "metric"), as_fraction)
    return FiniteMetricMagma(law, metric, tuple(labels) if labels is not None else None)


def magma_to_json(M: FiniteMetricMagma) -> dict:
    out = {"n": M.n, "law": [list(r) for r in M.law], "metric": [list(r) for r in M.metric]}
    if M.labels is not None:
        out["labels"] = list(M.labels)
    return jsonable(out)


def read_magma(arg: str) -> FiniteMetricMagma:
    """A magma file path, or a builtin carrier name when no such file exists."""
    if Path(arg).exists() or not _BUILTIN.match(arg):
        return magma_from_json(load_json(arg), "")
    return builtin_magma(arg)


# -- functions on a finite carrier -------------------------------------------------


def _values(obj, where, n=None):
    vals = _field(obj, "values", list, where)
    if n is not None and len(vals) != n:
        raise ParseError(f"expected {n} values, got {len(vals)}", _join(where, "values"))
    return tuple(as_ext(v, f"{_join(where, 'values')}[{i}]") for i, v in enumerate(vals))


def fn_from_json(obj, n: int | None = None, where: str = "") -> FnOnX:
    declared = _field(obj, "n", int, where)
    if n is not None and declared != n:
        raise ParseError(f"function lives on {declared} points, carrier has {n}", _join(where, "n"))
    return FnOnX(_values(obj, where, declared))


def fn_to_json(f: FnOnX) -> dict:
    return jsonable(f)


def subspace_from_json(obj, where: str = "") -> SubspaceFn:
    n = _field(obj, "n", int, where)
    metric = _matrix(_field(obj, "metric", list, where), n, _join(where, "metric"), as_fraction)
    subset = _field(obj, "subset", list, where)
    for i, y in enumerate(subset):
        if isinstance(y, bool) or not isinstance(y, int):
            raise ParseError(f"expected an index, got {y!r}", f"{_join(where, 'subset')}[{i}]")
    vals = _field(obj, "values", list, where)
    vals = tuple(as_fraction(v, f"{_join(where, 'values')}[{i}]") for i, v in enumerate(vals))
    return SubspaceFn(metric, tuple(subset), vals)


def subspace_to_json(sf: SubspaceFn) -> dict:
    return jsonable({"n": sf.n, "metric": sf.metric, "subset": list(sf.subset), "values": sf.values})


# -- sequences ---------------------------------------------------------------------


def cyclic_from_json(obj, where: str = "") -> CyclicSeq:
    n = _field(obj, "n", int, where)
    vals = _values(obj, where, n)
    return CyclicSeq(tuple(as_fraction(v, f"{_join(where, 'values')}[{i}]") for i, v in enumerate(vals)))


def cofinite_from_json(obj, where: str = "") -> CofiniteSeq:
    default = as_fraction(_field(obj, "default", None, where), _join(where, "default"))
    raw = obj.get("values", {})
    if not isinstance(raw, dict):
        raise ParseError("expected an object mapping integer indices to values", _join(where, "values"))
    exc = []
    for k, v in raw.items():
        loc = f"{_join(where, 'values')}[{k!r}]"
        try:
            idx = int(k)
        except ValueError:
            raise ParseError("index is not an integer", loc) from None
        exc.append((idx, as_fraction(v, loc)))
    return CofiniteSeq(default, tuple(exc))


# -- piecewise-linear functions on the line ------------------------------------------


def pl_from_json(obj, where: str = "") -> PLKatetovFn:
    pts = _field(obj, "breakpoints", list, where)
    out = []
    for i, p in enumerate(pts):
        loc = f"{_join(where, 'breakpoints')}[{i}]"
        if not isinstance(p, list) or len(p) != 2:
            raise ParseError("expected a pair [x, v]", loc)
        out.append((as_fraction(p[0], loc + "[0]"), as_fraction(p[1], loc + "[1]")))
    return PLKatetovFn(tuple(out))
