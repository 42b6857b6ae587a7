"""
Surgery slopes and exact rationals.

A slope on the boundary of a knot exterior in a homology sphere is a
reduced fraction p/q.  We store it with the sign in ``p`` and ``q >= 1``;
the meridian is the one slope with ``q == 0`` and is written ``1/0``.

Fractions elsewhere in the package are plain :class:`fractions.Fraction`
values, exported here as ``Rational``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Rational = Fraction

__all__ = [
    "Rational",
    "Slope",
    "SlopePair",
    "reduce",
    "distance",
    "mirror",
    "parse_slope",
    "format_fraction",
]


@dataclass(frozen=True, order=True)
class Slope:
    p: int
    q: int

    def __post_init__(self):
        if self.q < 0 or (self.q == 0 and self.p != 1):
            raise ValueError(f"non-canonical slope {self.p}/{self.q}")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"slope {self.p}/{self.q} is not reduced")

    @property
    def is_meridian(self) -> bool:
        return self.q == 0

    def as_fraction(self) -> Fraction:
        if self.is_meridian:
            raise ValueError("the meridian 1/0 has no rational value")
        return Fraction(self.p, self.q)

    def __str__(self):
        if self.q == 1:
            return str(self.p)
        return f"{self.p}/{self.q}"

    def __neg__(self):
        return mirror(self)


@dataclass(frozen=True)
class SlopePair:
    """Two slopes that are candidates for a chirally cosmetic pair.

    Both surgeries must have the same |H_1|, so ``|first.p| == |second.p|``.
    The sign of p may differ because canonical slopes carry their sign in p:
    the pair written ``p/q, p/q'`` with ``q' < 0`` is stored as
    ``(p/q, -p/|q'|)``.
    """

    first: Slope
    second: Slope

    def __post_init__(self):
        if abs(self.first.p) != abs(self.second.p):
            raise ValueError(
                f"slopes {self.first} and {self.second} have different |p|")

    @property
    def distance(self) -> int:
        return distance(self.first, self.second)

    @property
    def is_mirror_pair(self) -> bool:
        return self.second == mirror(self.first) and self.first.p != 0

    def __iter__(self):
        yield self.first
        yield self.second

    def __str__(self):
        return f"({self.first}, {self.second})"


def reduce(p: int, q: int) -> Slope:
    """Canonical slope for the (possibly unreduced) pair ``(p, q)``."""
    if p == 0 and q == 0:
        raise ValueError("(0, 0) is not a slope")
    g = gcd(p, q)
    p, q = p // g, q // g
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return Slope(p, q)


def distance(a: Slope, b: Slope) -> int:
    """Geometric intersection number |a.p b.q - b.p a.q|."""
    return abs(a.p * b.q - b.p * a.q)


def mirror(a: Slope) -> Slope:
    if a.is_meridian:
        return a
    return Slope(-a.p, a.q)


def parse_slope(text: str) -> Slope:
    """Parse ``"9"``, ``"9/2"``, ``"-1/3"`` and friends; whitespace is ignored."""
    text = str(text).strip().replace(" ", "")
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"cannot parse slope {text!r}") from None
    return reduce(p, q)


def format_fraction(x) -> str:
    """Exact string form of an integer or Fraction: ``"14/27"``, ``"9"``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
