"""Period and dynatomic polynomials of the two map families.

Writing the n-th iterate of a degree-2 map in homogeneous form
[F_n(x,y) : G_n(x,y)] (both of degree 2^n), the n-period polynomial is
Phi_n = y*F_n - x*G_n and the n-th dynatomic polynomial is the Moebius
product  Phi*_n = prod_{d|n} Phi_d^{mu(n/d)},  computed here as one exact
division of the mu=+1 product by the mu=-1 product.  Every rational point of
exact period n is a root of Phi*_n; the converse needs an exact-period
filter because roots can have period strictly dividing n.

Univariate polynomials are the y=1 dehomogenizations.  Dynatomic results are
returned in canonical form: primitive integer coefficients, positive leading
coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Optional, Tuple

from . import _intpoly
from .dynamics import DEFAULT_MAX_STEPS, KBMap, Map, QuadraticMap, exact_period
from .errors import DomainError, parameter_excluded
from .polynomials import HomogeneousPoly, Poly

__all__ = [
    "moebius",
    "IteratePair",
    "iterate_pair",
    "period_polynomial",
    "dynatomic_polynomial",
    "period4_dynatomic_factors",
    "rational_roots",
    "periodic_points_exact",
]


def moebius(n: int) -> int:
    """Moebius function: 1, (-1)^l for squarefree n with l prime factors, else 0."""
    if n < 1:
        raise parameter_excluded("n", n)
    if n == 1:
        return 1
    count = 0
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            count += 1
        else:
            p += 1
    if n > 1:
        count += 1
    return -1 if count % 2 else 1


def _divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True)
class IteratePair:
    """Homogeneous n-th iterate [F : G], both of degree 2^n, coprime."""

    F: HomogeneousPoly
    G: HomogeneousPoly
    n: int


def _dehom_pairs(m: Map, n: int) -> List[Tuple[Poly, Poly]]:
    """(f_k, g_k) = dehomogenized iterate components for k = 1..n."""
    if n < 1:
        raise parameter_excluded("n", n)
    if isinstance(m, QuadraticMap):
        f = Poly([m.c, 0, 1])
        g = Poly([1])
        step = lambda f, g: (f * f + (g * g).scale(m.c), g * g)
    else:
        f = Poly([m.b, 0, m.k])
        g = Poly([0, 1])
        step = lambda f, g: ((f * f).scale(m.k) + (g * g).scale(m.b), f * g)
    pairs = [(f, g)]
    for _ in range(n - 1):
        f, g = step(f, g)
        pairs.append((f, g))
    return pairs


def iterate_pair(m: Map, n: int) -> IteratePair:
    """Symbolic homogeneous n-th iterate of the map."""
    f, g = _dehom_pairs(m, n)[-1]
    deg = 2**n
    return IteratePair(
        HomogeneousPoly.homogenize(f, deg), HomogeneousPoly.homogenize(g, deg), n
    )


def period_polynomial(m: Map, n: int) -> Poly:
    """Phi_n(z): the y=1 dehomogenization of y*F_n - x*G_n, exact coefficients."""
    f, g = _dehom_pairs(m, n)[-1]
    return f - Poly([0, 1]) * g


def _int_period_polys(m: Map, n: int) -> List[List[int]]:
    """Integer vectors proportional to Phi_1..Phi_n.

    The iterate components are kept on one common integer scale, so
    f_k - z*g_k stays proportional to the true period polynomial; constant
    factors are irrelevant to roots and are stripped by the callers.
    """
    if n < 1:
        raise parameter_excluded("n", n)
    if isinstance(m, QuadraticMap):
        e, d = m.c.numerator, m.c.denominator

        def step(f, g):
            gg = _intpoly.pmul(g, g)
            return (
                _intpoly.padd(
                    _intpoly.pscale(_intpoly.pmul(f, f), d), _intpoly.pscale(gg, e)
                ),
                _intpoly.pscale(gg, d),
            )

        f, g = [e, 0, d], [d]
    else:
        kn, kd = m.k.numerator, m.k.denominator
        bn, bd = m.b.numerator, m.b.denominator

        def step(f, g):
            return (
                _intpoly.padd(
                    _intpoly.pscale(_intpoly.pmul(f, f), kn * bd),
                    _intpoly.pscale(_intpoly.pmul(g, g), bn * kd),
                ),
                _intpoly.pscale(_intpoly.pmul(f, g), kd * bd),
            )

        f, g = [bn * kd, 0, kn * bd], [0, kd * bd]
    out = []
    for k in range(1, n + 1):
        if k > 1:
            f, g = step(f, g)
        out.append(_intpoly.pstrip(_intpoly.psub(f, [0] + list(g))))
    return out


def dynatomic_int(m: Map, n: int) -> List[int]:
    """Canonical integer coefficient vector of the n-th dynatomic polynomial."""
    phis = _int_period_polys(m, n)
    num = [1]
    den = [1]
    for d in _divisors(n):
        mu = moebius(n // d)
        if mu == 1:
            num = _intpoly.pmul(num, phis[d - 1])
        elif mu == -1:
            den = _intpoly.pmul(den, phis[d - 1])
    num = _intpoly.pprimitive(num)
    den = _intpoly.pprimitive(den)
    return _intpoly.pprimitive(_intpoly.pdiv_exact(num, den))


def dynatomic_polynomial(m: Map, n: int) -> Poly:
    """Phi*_n in canonical form (primitive integer, positive leading coeff)."""
    return Poly(dynatomic_int(m, n))


def period4_dynatomic_factors(k: Fraction, b: Fraction) -> Tuple[Poly, Poly]:
    """The two factors of Phi*_4 for phi(z) = kz + b/z.

    The degree-4 factor carries every rational period-4 point; the degree-8
    cofactor has no rational roots.  Coefficients are evaluated exactly at
    (k, b).
    """
    k, b = Fraction(k), Fraction(b)
    if k == 0:
        raise parameter_excluded("k", 0)
    if b == 0:
        raise parameter_excluded("b", 0)
    quartic = Poly([b * b * k, 0, 2 * b + 2 * b * k**2, 0, k + k**3])
    cofactor = Poly(
        [
            b**4 * k**5,
            0,
            b**3 + b**3 * k**2 + 2 * b**3 * k**4 + 4 * b**3 * k**6,
            0,
            b**2 * k + 3 * b**2 * k**3 + 4 * b**2 * k**5 + 6 * b**2 * k**7,
            0,
            b * k**4 + 2 * b * k**6 + 4 * b * k**8,
            0,
            k**9,
        ]
    )
    return quartic, cofactor


def rational_roots(p: Poly, height_bound: Optional[int] = None) -> FrozenSet[Fraction]:
    """All rational roots of p (multiplicities discarded).

    Denominators are cleared and the rational root theorem is applied to
    integer divisor pairs.  ``height_bound`` restricts the search to roots of
    height <= bound (used by the scans, where coefficients are huge but only
    bounded points matter).
    """
    if p.is_zero:
        raise DomainError("zero polynomial has all roots")
    ints = p.content_den_cleared()
    return frozenset(_intpoly.rational_roots_int(list(ints), height_bound))


def periodic_points_exact(
    m: Map,
    n: int,
    max_steps: int = DEFAULT_MAX_STEPS,
    height_bound: Optional[int] = None,
) -> FrozenSet[Fraction]:
    """Rational points of exact period n: dynatomic roots + period filter."""
    roots = _intpoly.rational_roots_int(dynatomic_int(m, n), height_bound)
    out = []
    for r in roots:
        if isinstance(m, KBMap) and r == 0:
            continue
        if exact_period(m, r, max_steps=max_steps) == n:
            out.append(r)
    return frozenset(out)
