"""Exact rational scalars, projective points, and height-ordered enumeration.

Rational numbers are ``fractions.Fraction`` values throughout: the stdlib
type already keeps ``gcd(|num|, den) == 1``, ``den >= 1`` and represents zero
as ``0/1``, which is exactly the canonical form every routine here relies on.
This module adds the measure-and-search layer on top: the naive height, exact
square roots, duplicate-free enumeration of all rationals up to a height
bound, and the text grammar used by the CLI and the JSON reports.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .errors import DomainError

__all__ = [
    "Rational",
    "normalize_rational",
    "height",
    "rational_sqrt",
    "is_rational_square",
    "enumerate_rationals",
    "count_rationals",
    "parse_rational",
    "format_rational",
    "ProjectivePoint",
    "INFINITY",
    "parse_point",
    "format_point",
]

Rational = Fraction

# CLI / JSON grammar: "n" or "n/d", one optional leading minus, no whitespace.
_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")


def normalize_rational(n: int, d: int) -> Fraction:
    """Return the canonical fraction n/d (sign on the numerator).

    Raises DomainError("division by zero") when d == 0.
    """
    if d == 0:
        raise DomainError("division by zero")
    return Fraction(n, d)


def height(r: Fraction) -> int:
    """Naive height max(|numerator|, denominator) of a reduced fraction."""
    return max(abs(r.numerator), r.denominator)


def rational_sqrt(r: Fraction) -> Optional[Fraction]:
    """The nonnegative s with s*s == r, or None when r is not a square.

    A reduced fraction is a square exactly when numerator and denominator
    are both perfect integer squares.
    """
    if r < 0:
        return None
    num, den = r.numerator, r.denominator
    sn = math.isqrt(num)
    if sn * sn != num:
        return None
    sd = math.isqrt(den)
    if sd * sd != den:
        return None
    return Fraction(sn, sd)


def is_rational_square(r: Fraction) -> bool:
    return rational_sqrt(r) is not None


def _height_slice(h: int):
    """All reduced (n, d) with max(|n|, d) == h, sorted by (n, d)."""
    if h == 1:
        return [(-1, 1), (0, 1), (1, 1)]
    out = []
    # |n| == h, 1 <= d < h
    for d in range(1, h):
        if math.gcd(h, d) == 1:
            out.append((-h, d))
            out.append((h, d))
    # d == h, 1 <= |n| < h
    for n in range(1, h):
        if math.gcd(n, h) == 1:
            out.append((-n, h))
            out.append((n, h))
    out.sort()
    return out


def enumerate_rationals(bound: int) -> Iterator[Fraction]:
    """Yield every rational of height <= bound exactly once.

    Order: ascending height, then numerator, then denominator.  The order is
    part of the contract; scan reports rely on it being reproducible.
    """
    if bound < 1:
        raise DomainError(f"parameter excluded: bound={bound}")
    for h in range(1, bound + 1):
        for n, d in _height_slice(h):
            yield Fraction(n, d)


def count_rationals(bound: int) -> int:
    """Number of rationals of height <= bound (totient sum, no enumeration)."""
    if bound < 1:
        raise DomainError(f"parameter excluded: bound={bound}")
    tot = 3  # height 1: -1, 0, 1
    for h in range(2, bound + 1):
        tot += 4 * _totient(h)
    return tot


def _totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def parse_rational(text: str) -> Fraction:
    """Parse "n" or "n/d" (optional leading minus, no whitespace)."""
    if not _RATIONAL_RE.match(text):
        raise DomainError(f"invalid rational: {text!r}")
    if "/" in text:
        n, d = text.split("/")
        return normalize_rational(int(n), int(d))
    return Fraction(int(text))


def format_rational(r: Fraction) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


@dataclass(frozen=True)
class ProjectivePoint:
    """A point of P^1(Q) as a coprime integer pair (x : y).

    Canonical form: gcd(|x|, |y|) == 1 and y > 0, or (y == 0 and x == 1),
    so the point at infinity is exactly (1 : 0).  Construction canonicalizes,
    hence (x, y) and (-x, -y) build the same object.
    """

    x: int
    y: int

    def __post_init__(self):
        x, y = self.x, self.y
        if x == 0 and y == 0:
            raise DomainError("parameter excluded: (x,y)=(0,0)")
        g = math.gcd(abs(x), abs(y))
        x //= g
        y //= g
        if y < 0 or (y == 0 and x < 0):
            x, y = -x, -y
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def from_rational(cls, r: Fraction) -> "ProjectivePoint":
        return cls(r.numerator, r.denominator)

    @property
    def is_infinity(self) -> bool:
        return self.y == 0

    def to_rational(self) -> Optional[Fraction]:
        """The affine value x/y, or None for the point at infinity."""
        if self.y == 0:
            return None
        return Fraction(self.x, self.y)

    def point_height(self) -> int:
        return max(abs(self.x), abs(self.y))

    def __repr__(self):
        return f"ProjectivePoint({self.x}, {self.y})"


INFINITY = ProjectivePoint(1, 0)


def parse_point(text: str) -> ProjectivePoint:
    """Parse a point: the rational grammar, or "inf" for infinity."""
    if text == "inf":
        return INFINITY
    return ProjectivePoint.from_rational(parse_rational(text))


def format_point(p: ProjectivePoint) -> str:
    if p.is_infinity:
        return "inf"
    return format_rational(Fraction(p.x, p.y))
