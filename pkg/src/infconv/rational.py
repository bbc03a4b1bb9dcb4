"""Exact extended rationals.

Finite values are :class:`fractions.Fraction`; the single non-finite value is
``INF`` (``math.inf``), which compares above every Fraction and absorbs
addition. ``-inf`` and ``nan`` never appear.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import ParseError

INF = math.inf

ExtValue = Union[Fraction, float]


def is_finite(v) -> bool:
    return v != INF


def as_fraction(v, location=None) -> Fraction:
    """Coerce ints, Fractions and rational strings ("3", "-2/5", "0.25") to Fraction.

    Floats are refused: they would smuggle binary rounding into exact code.
    """
    if isinstance(v, bool):
        raise ParseError(f"expected a rational, got {v!r}", location)
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a rational: {v!r}", location) from None
    raise ParseError(f"expected a rational string or integer, got {type(v).__name__}", location)


def as_ext(v, location=None) -> ExtValue:
    if isinstance(v, float) and v == INF:
        return INF
    if isinstance(v, str) and v.strip().lower() in ("+inf", "inf", "infinity", "+infinity"):
        return INF
    return as_fraction(v, location)


def format_ext(v: ExtValue) -> str:
    if v == INF:
        return "+inf"
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
