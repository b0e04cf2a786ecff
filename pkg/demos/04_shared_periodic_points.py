#!/usr/bin/env python3
"""Maps sharing one rational periodic point, and how far orbits can agree.

Generators for (k, b, c) triples and (k1, b1, k2, b2) quadruples with a
common periodic point, the subfamilies whose orbits meet twice, the
finite/infinite dichotomy for a prescribed pair of periodic values, and the
at-most-three bound for quadratic polynomials.
"""

from fractions import Fraction as F

from ratdyn import (
    kb_pair_family,
    maps_with_both_periodic,
    orbit_intersection,
    quadratics_with_periodic_point,
    triples_fixed_point,
    triples_period2,
    triples_period3,
    two_point_intersection_kb,
    two_point_intersection_mixed,
)

print("== quad/KB triples through one point ==")
for trip in [
    triples_fixed_point(F(3, 2), 1, F(1)),
    triples_fixed_point(F(2), 4, F(2)),
    triples_period2(F(1, 2), 1, F(1)),
    triples_period3(F(1), 2, 1, F(16)),
]:
    print(f"  point {trip.shared_point!s:5} periods ({trip.f_period},{trip.phi_period}): "
          f"k={trip.k!s:6} b={trip.b!s:8} c={trip.c}")

print("\n== orbits meeting in two points ==")
t = two_point_intersection_mixed(F(3), 1)
got = orbit_intersection(t.quadratic(), t.kb(), F(3))
print(f"  z^2 - 13 vs (24/7)z - 300/(7z): intersection {sorted(got)}")

print("\n== KB pairs through one point ==")
q = kb_pair_family(3, F(3, 5), F(2), F(1, 3))
print(f"  row (4,4) at p=3/5: ({q.k1},{q.b1}) and ({q.k2},{q.b2})")
q = two_point_intersection_kb(3, F(3, 5), F(2), F(1, 3))
print("  their orbit intersection:", sorted(orbit_intersection(q.first(), q.second(), F(3, 5))))

print("\n== prescribed pair of periodic values ==")
res = maps_with_both_periodic(F(1), F(2))
print("  a=1, b=2 (a^2 != b^2): exactly", len(res.maps), "maps:")
for e in res.maps:
    print(f"    (k,b)=({e.map.k},{e.map.b}) with periods ({e.period_a},{e.period_b})")
res = maps_with_both_periodic(F(3, 5), F(-3, 5))
print("  a=3/5, b=-3/5 (a^2 = b^2): infinitely many;",
      len(res.families), "one-parameter families, e.g.",
      res.families[2].map_at(F(2)).describe())

print("\n== at most three quadratic polynomials share one periodic point ==")
for qv in (F(101, 40), F(0), F(1, 2), F(-1, 2)):
    entries = quadratics_with_periodic_point(qv)
    rows = ", ".join(f"c={e.c} (period {e.period})" for e in entries)
    print(f"  q={qv!s:6}: {rows}")
