"""Exact rational scalars.

Scalars are plain Python ``int`` or :class:`fractions.Fraction` values.
Integral values are always stored as ``int`` so that the common case (integer
structure constants) runs on machine-fast integer arithmetic; a ``Fraction``
never has denominator 1 once it has passed through :func:`norm`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def norm(x: Rational) -> Rational:
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def Q(x) -> Rational:
    """Coerce ``x`` to a normalised exact rational.

    Accepts ints, Fractions and strings of the form ``"a"`` or ``"a/b"``.
    Floats and bools are rejected: they have no place in exact computations.
    """
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return norm(x)
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact or boolean scalar {x!r}")
    if isinstance(x, int):
        return int(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def parse_rational(text: str) -> Rational:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        return num
    den = int(m.group(2))
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return norm(Fraction(num, den))


def format_rational(x: Rational) -> str:
    x = norm(x)
    if type(x) is int:
        return str(x)
    return f"{x.numerator}/{x.denominator}"
