"""Exact arithmetic kernel: rationals and generalized binomial coefficients.

Every quantity in this package is an exact rational.  ``Rat`` is the stdlib
``Fraction``, which already keeps values reduced with a positive denominator
and raises on division by zero; natural-number arguments are plain ``int``
validated at the boundary.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import factorial
from typing import Sequence, Union

Rat = Fraction

# Accepted anywhere a rational parameter is expected.
RatLike = Union[Fraction, int]

_RAT_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def as_rat(value: RatLike | str) -> Rat:
    """Coerce an int, Fraction or strict "p/q" string to Rat.

    The string form allows an optional sign, digits and an optional
    "/digits" part, nothing else; float notation is rejected.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RAT_RE.match(value):
            raise ValueError(f"not a rational literal: {value!r}")
        return Fraction(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def rat_str(value: RatLike) -> str:
    """Canonical text form: "num/den", or just "num" for integral values."""
    return str(Fraction(value))


def check_nat(n: int, name: str = "n") -> int:
    """Validate that n is a plain non-negative integer and return it."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"{name} must be a non-negative integer, got {n!r}")
    return n


def binom(x: RatLike, k: int) -> Rat:
    """Generalized binomial coefficient x(x-1)...(x-k+1) / k!.

    Defined for every rational x and non-negative integer k, with
    binom(x, 0) = 1.  The falling factorial is accumulated left to right
    and divided by k! once at the end.
    """
    check_nat(k, "k")
    x = Fraction(x)
    num = Fraction(1)
    for i in range(k):
        num *= x - i
    return num / factorial(k)


def multinomial(x: RatLike, parts: Sequence[int]) -> Rat:
    """Product-of-binomials multinomial with the final block left implicit.

    ``parts`` lists every block size except the last one, which equals x
    minus the listed total and never enters the product.  An empty list
    gives 1.
    """
    x = Fraction(x)
    out = Fraction(1)
    for m in parts:
        check_nat(m, "part")
        out *= binom(x, m)
        x -= m
    return out


def kronecker(n: int) -> Rat:
    """1 at n = 0, else 0."""
    check_nat(n)
    return Fraction(1 if n == 0 else 0)
