"""Dual-mode scalars.

Exact mode works over `fractions.Fraction`; float mode over `float`.  A
coefficient set never mixes the two: the mode is a property of the whole
tuple, decided when the input is parsed.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import ParseError

Scalar = Union[Fraction, float]

EXACT = "exact"
FLOAT = "float"


def parse_scalar(value, mode: str) -> Scalar:
    """Parse one JSON/CSV cell: int, "p/q" string, decimal string, or float.

    Floats (JSON numbers with a fractional part) are rejected in exact mode;
    a decimal *string* like "0.25" is exact and allowed in either mode.
    """
    if isinstance(value, bool):
        raise ParseError(f"boolean is not a coefficient: {value!r}")
    if isinstance(value, int):
        return Fraction(value) if mode == EXACT else float(value)
    if isinstance(value, float):
        if mode == EXACT:
            raise ParseError(
                f"float literal {value!r} in exact mode; pass a string like \"1/3\" or \"0.25\"")
        return value
    if isinstance(value, str):
        text = value.strip()
        try:
            frac = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"cannot parse coefficient {value!r}: {exc}") from exc
        return frac if mode == EXACT else float(frac)
    raise ParseError(f"unsupported coefficient type {type(value).__name__}: {value!r}")


def format_scalar(v: Scalar):
    """JSON-friendly form: Fractions as int or "p/q" string, floats as floats."""
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return int(v)
        return f"{v.numerator}/{v.denominator}"
    return float(v)


def scalar_is_exact(v: Scalar) -> bool:
    return isinstance(v, (Fraction, int))


def exact_sqrt(v: Fraction):
    """Square root of a nonnegative rational if it is rational, else None."""
    if v < 0:
        return None
    num, den = v.numerator, v.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def sqrt_scalar(v: Scalar) -> Scalar:
    """Exact square root for perfect rational squares, float otherwise.

    Callers that must stay closed over the rationals should use exact_sqrt
    and handle the None case themselves.
    """
    if isinstance(v, Fraction):
        r = exact_sqrt(v)
        if r is not None:
            return r
        return math.sqrt(float(v))
    return math.sqrt(v)
