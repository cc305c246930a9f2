"""Exact rational scalars and their canonical string form.

`Rat` is `fractions.Fraction`, which is always stored reduced with a positive
denominator. JSON output carries rationals as strings, `"p/q"` or `"p"`.
"""
from fractions import Fraction
from typing import Any, Iterable, Sequence, Union

import sympy as sp

from tvb.types import Rat, RatVector

RatLike = Union[int, str, Fraction]


def as_rat(value: RatLike) -> Rat:
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    return Fraction(value)


def rat_to_str(value: Rat) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rat(text: str) -> Rat:
    return Fraction(text.strip())


def as_vector(values: Iterable[RatLike]) -> RatVector:
    return tuple(as_rat(value) for value in values)


def vector_to_str(values: Sequence[Rat]) -> list:
    return [rat_to_str(value) for value in values]


def dot(u: Sequence[Rat], v: Sequence[Rat]) -> Rat:
    return sum((x * y for x, y in zip(u, v)), Fraction(0))


def to_sympy_rat(value: Rat) -> sp.Rational:
    return sp.Rational(value.numerator, value.denominator)


def from_sympy_rat(value: Any) -> Rat:
    if not isinstance(value, sp.Rational):
        raise TypeError(f"{value} is not an exact rational")
    return Fraction(int(value.p), int(value.q))
