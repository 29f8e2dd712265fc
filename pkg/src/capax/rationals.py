"""Exact rational scalars.

All real quantities in capax (shape parameters, T values, slice coordinates)
are `fractions.Fraction` instances, so every comparison, floor and ceiling is
exact.  This module holds the parsing and rendering conventions:

* input accepts integers, "p/q" strings and decimal literals, converted
  exactly ("3.5" -> 7/2, "0.1" -> 1/10);
* floats are rejected, since a float literal has already lost exactness
  before we see it;
* output renders a terminating decimal when the denominator is 2^a * 5^b
  (so 7/2 prints as "3.5", matching tables), and "p/q" otherwise.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import InvalidInputError, UnboundedDomainError

RationalLike = Union[Fraction, int, str]

_INFINITE_TOKENS = {"inf", "+inf", "-inf", "infinity", "+infinity", "-infinity",
                    "oo", "+oo", "-oo", "nan"}


def to_fraction(value: RationalLike) -> Fraction:
    """Convert an exact rational description to a Fraction.

    Accepts Fraction, int, and strings of the form "p/q", "p", or a decimal
    literal such as "3.5".  Floats are rejected: pass the literal as a string
    instead so the conversion is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidInputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise InvalidInputError(
            f"float {value!r} rejected: pass the value as a string "
            f"(e.g. \"3.5\") to keep the conversion exact"
        )
    if isinstance(value, str):
        text = value.strip()
        if text.lower() in _INFINITE_TOKENS:
            raise UnboundedDomainError(f"infinite value {value!r} is not allowed")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInputError(f"cannot parse rational {value!r}: {exc}") from exc
    raise InvalidInputError(f"not a rational: {value!r}")


def to_fraction_vector(values: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    return tuple(to_fraction(v) for v in values)


def floor(q: Fraction) -> int:
    return math.floor(q)


def ceil(q: Fraction) -> int:
    return math.ceil(q)


def format_rational(q: Fraction) -> str:
    """Render exactly: integer, terminating decimal, or "p/q"."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    den = q.denominator
    twos = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    fives = 0
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{q.numerator}/{q.denominator}"
    digits = max(twos, fives)
    scaled = q.numerator * 10**digits // q.denominator
    sign = "-" if scaled < 0 else ""
    body = str(abs(scaled)).rjust(digits + 1, "0")
    whole, frac = body[:-digits], body[-digits:]
    return f"{sign}{whole}.{frac}"


def rational_to_json(q: Fraction) -> str:
    """Canonical JSON encoding: str(Fraction), i.e. "p" or "p/q"."""
    return str(Fraction(q))


def vector_to_json(v: Sequence[Fraction]) -> list[str]:
    return [rational_to_json(q) for q in v]


def format_vector(v: Sequence[Fraction]) -> str:
    return "(" + ", ".join(format_rational(q) for q in v) + ")"
