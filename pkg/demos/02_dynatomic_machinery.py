#!/usr/bin/env python3
"""Period polynomials, Moebius products, and the dynatomic route to cycles.

The n-th dynatomic polynomial collects the period-n behaviour of a map; its
rational roots, filtered by true exact period, list every rational point of
exact period n.  For kz + b/z the 4th dynatomic polynomial splits into a
quartic factor (which carries all the rational 4-cycles) and a degree-8
cofactor with no rational roots.
"""

from fractions import Fraction as F

from ratdyn import (
    KBMap,
    QuadraticMap,
    dynatomic_polynomial,
    iterate_pair,
    moebius,
    period4_dynatomic_factors,
    period_polynomial,
    periodic_points_exact,
    rational_roots,
)

print("== Moebius function ==")
print("  mu(1..12) =", [moebius(n) for n in range(1, 13)])

print("\n== homogeneous iterates ==")
ip = iterate_pair(QuadraticMap(F(-1)), 2)
print("  second iterate of z^2 - 1: F =", ip.F.coeffs, " G =", ip.G.coeffs)
print("  degrees are 2^n:", ip.F.degree, ip.G.degree)

print("\n== period polynomials ==")
for m, n in [(QuadraticMap(F(-13)), 1), (QuadraticMap(F(-13)), 2), (KBMap(F(1), F(1)), 1)]:
    print(f"  Phi_{n} of {m.describe():18s} = {period_polynomial(m, n).to_string()}")

print("\n== dynatomic polynomials via exact division ==")
m = QuadraticMap(F(-3))
d2 = dynatomic_polynomial(m, 2)
print(f"  Phi*_2 of {m.describe()} = {d2.to_string()};  roots {sorted(rational_roots(d2))}")
for n in (1, 2, 3, 4):
    print(f"  deg Phi*_{n} of z^2 + 1/3:", dynatomic_polynomial(QuadraticMap(F(1, 3)), n).degree)

print("\n== the quartic factor of Phi*_4 for kz + b/z ==")
quartic, cofactor = period4_dynatomic_factors(F(1), F(1))
print("  at (k, b) = (1, 1):", quartic.to_string(), " | cofactor degree", cofactor.degree)
quartic, cofactor = period4_dynatomic_factors(F(24, 7), F(-300, 7))
print("  at (24/7, -300/7): quartic roots", sorted(rational_roots(quartic)),
      "| cofactor roots", sorted(rational_roots(cofactor)))
full = dynatomic_polynomial(KBMap(F(24, 7), F(-300, 7)), 4)
print("  product reproduces Phi*_4 exactly:", (quartic * cofactor).canonical() == full)

print("\n== the generic exact-period oracle ==")
show = lambda pts: [str(p) for p in sorted(pts)]
print("  periods 1/2 of z^2 - 13:",
      show(periodic_points_exact(QuadraticMap(F(-13)), 1)),
      show(periodic_points_exact(QuadraticMap(F(-13)), 2)))
print("  period 4 of (24/7)z - 300/(7z):",
      show(periodic_points_exact(KBMap(F(24, 7), F(-300, 7)), 4)))
print("  period 3 of the same map (always empty for this family):",
      show(periodic_points_exact(KBMap(F(24, 7), F(-300, 7)), 3)))
