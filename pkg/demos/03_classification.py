#!/usr/bin/env python3
"""Closed-form classification of rational cycles, with parameter witnesses.

z^2 + c admits rational cycles of length 1, 2, 3 only, each governed by a
square condition or a tau-family; kz + b/z admits lengths 1, 2, 4 only.
Every closed form is cross-checked against the dynatomic oracle.
"""

from fractions import Fraction as F

from ratdyn import (
    KBMap,
    QuadraticMap,
    kb_map_with_fixed_and_period2,
    kb_period4_family,
    kb_periodic_points,
    kb_witness,
    period3_family,
    periodic_points_exact,
    quad_period3_cycle,
    quad_periodic_points,
    quad_witness,
)

print("== z^2 + c ==")
for c, n in [(F(-3, 4), 1), (F(1, 4), 1), (F(-3), 2), (F(-29, 16), 3)]:
    pts = sorted(quad_periodic_points(c, n))
    wit = quad_witness(c, n)
    print(f"  c={c!s:7} n={n}: points {pts}  witness {wit}")
print("  3-cycle of c=-29/16 in orbit order:", quad_period3_cycle(F(-29, 16)))

print("\n== the tau-family of 3-cycles ==")
for tau in (F(1), F(2), F(1, 2)):
    fam = period3_family(tau)
    print(f"  tau={tau!s:4}: c={fam.c!s:10} cycle {fam.points}")

print("\n== kz + b/z ==")
for (k, b), n in [((F(3), F(-1, 2)), 1), ((F(-5, 6), F(-3, 2)), 2), ((F(4, 3), F(-10, 3)), 4)]:
    pts = sorted(kb_periodic_points(k, b, n))
    print(f"  (k,b)=({k},{b}) n={n}: points {pts}  witness m={kb_witness(k, b, n)}")

print("\n== the m-family of 4-cycles ==")
for m in (F(2), F(3)):
    fam = kb_period4_family(m)
    print(f"  m={m}: (k,b)=({fam.k},{fam.b}) cycle {fam.points}")

print("\n== a map with prescribed fixed point and 2-cycle point ==")
mp = kb_map_with_fixed_and_period2(F(1), F(2))
print(f"  fixed 1, period-2 2  ->  (k,b) = ({mp.k}, {mp.b})")

print("\n== closed forms agree with the dynatomic oracle ==")
samples = [(F(-3), 2), (F(-29, 16), 3), (F(5, 7), 1)]
ok = all(
    quad_periodic_points(c, n) == periodic_points_exact(QuadraticMap(c), n)
    for c, n in samples
)
ok &= all(
    kb_periodic_points(k, b, n) == periodic_points_exact(KBMap(k, b), n)
    for (k, b), n in [((F(3), F(-1, 2)), 1), ((F(4, 3), F(-10, 3)), 4)]
)
print("  agreement on the samples above:", ok)
