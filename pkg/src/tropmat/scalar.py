"""Exact max-plus scalars.

A tropical scalar is either a :class:`fractions.Fraction` or the singleton
:data:`BOTTOM`, the additive identity (minus infinity).  ``BOTTOM`` compares
below every rational, so plain ``max`` implements tropical addition.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import InvertBottom, ParseError


class _Bottom:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "BOTTOM"

    def __reduce__(self):
        return (_Bottom, ())

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("tropmat.BOTTOM")

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self


BOTTOM = _Bottom()

TropScalar = Union[Fraction, _Bottom]


def is_bottom(a) -> bool:
    return a is BOTTOM


def trop(a) -> TropScalar:
    """Coerce ints, Fractions, rational strings or BOTTOM to a tropical scalar."""
    if a is BOTTOM:
        return a
    if isinstance(a, str):
        return parse_scalar(a)
    if isinstance(a, float):
        raise ParseError(f"floating-point value {a!r} rejected; use an exact rational")
    return Fraction(a)


def trop_add(a: TropScalar, b: TropScalar) -> TropScalar:
    return a if a >= b else b


def trop_mul(a: TropScalar, b: TropScalar) -> TropScalar:
    if a is BOTTOM or b is BOTTOM:
        return BOTTOM
    return a + b


def trop_inv(a: TropScalar) -> Fraction:
    if a is BOTTOM:
        raise InvertBottom("the additive identity has no multiplicative inverse")
    return -a


def trop_sum(values: Iterable[TropScalar]) -> TropScalar:
    return max(values, default=BOTTOM)


def bool_project(a: TropScalar) -> int:
    return 0 if a is BOTTOM else 1


def bool_add(a: int, b: int) -> int:
    return a | b


def bool_mul(a: int, b: int) -> int:
    return a & b


def parse_rational(text) -> Fraction:
    if isinstance(text, bool):
        raise ParseError(f"not a rational literal: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"not a rational literal: {text!r}")
    s = text.strip()
    if not s or any(ch in s for ch in ".eE"):
        raise ParseError(f"not a rational literal: {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational literal: {text!r}") from exc


def parse_scalar(text) -> TropScalar:
    if isinstance(text, str) and text.strip() == "-inf":
        return BOTTOM
    return parse_rational(text)


def format_scalar(a: TropScalar) -> str:
    if a is BOTTOM:
        return "-inf"
    return str(Fraction(a))
