"""Exact rational values: parsing, normalization and their text form."""

from fractions import Fraction
from typing import Annotated, Any

from pydantic import BeforeValidator, PlainSerializer
from sympy import Integer, Rational, nsimplify


def as_rational(value: Any) -> Rational:
    """Coerce ``"p/q"``, ``"p"``, ints, Fractions and sympy numbers to a sympy Rational.

    Floats are refused: every quantity in the toolkit is exact.
    """
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, int):
        return Integer(value)
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        try:
            frac = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
        if "." in text or "e" in text.lower():
            raise ValueError(f"decimal notation is not accepted: {value!r}")
        return Rational(frac.numerator, frac.denominator)
    if isinstance(value, float):
        raise ValueError(f"floating point value {value!r} is not exact")
    converted = nsimplify(value)
    if not isinstance(converted, Rational):
        raise ValueError(f"not a rational: {value!r}")
    return converted


def format_rational(value: Any) -> str:
    q = as_rational(value)
    if q.q == 1:
        return str(q.p)
    return f"{q.p}/{q.q}"


Rat = Annotated[Any, BeforeValidator(as_rational), PlainSerializer(format_rational, return_type=str)]
