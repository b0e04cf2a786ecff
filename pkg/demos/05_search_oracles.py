#!/usr/bin/env python3
"""Height-bounded searches: period scans, intersection bounds, quartics.

These are desk-scale instruments: they certify nothing beyond their height
boxes, but inside the box they are exhaustive and reproducible byte for
byte for any worker count.  (This script keeps the boxes small; the
acceptance suite runs the full configuration.)
"""

from fractions import Fraction as F

from ratdyn import (
    QuarticCurve,
    quartic_rational_points,
    scan_intersection_bound,
    scan_kb_periods,
    scan_quadratic_periods,
)

print("== quadratic scans ==")
rep = scan_quadratic_periods(8, 50, {1, 2}, workers=2)
print(f"  periods 1,2 for height(c)<=8: {len(rep.hits)} hits over {rep.scanned_count} maps")
rep = scan_quadratic_periods(8, 50, {4, 5}, workers=2)
print(f"  periods 4,5 for height(c)<=8: {len(rep.hits)} hits (expected none)")
rep = scan_quadratic_periods(32, 50, {3}, workers=2)
print(f"  period 3 needs height 29: {sorted({h['map'] for h in rep.hits})}")

print("\n== KB scans ==")
rep = scan_kb_periods(6, 6, 50, {3}, workers=2)
print(f"  period 3 over the height-6 box: {len(rep.hits)} hits (provably none exist)")
rep = scan_kb_periods(6, 6, 50, {4}, workers=2)
print(f"  period 4 over the same box: {len(rep.hits)} hits, e.g.",
      [h["map"] for h in rep.hits[:2]])

print("\n== orbit-intersection bound ==")
rep = scan_intersection_bound(5, 50, workers=2)
print(f"  pairs sharing a point in the height-5 box: {rep.scanned_count}")
for h in rep.hits:
    print(f"    size-{h['size']} intersection: {h['map1']} vs {h['map2']} (sign pair)")
print("  every intersection of size >= 3 comes from a map and its negative.")

print("\n== rational points on y^2 = quartic(t) ==")
for coeffs in [(1, 6, 7, 2, 1), (1, -2, -5, -2, 1), (1, 2, 7, 6, 1)]:
    curve = QuarticCurve(*(F(a) for a in coeffs))
    rep = quartic_rational_points(curve, 2000, workers=2)
    pts = [(str(t), str(y)) for t, y in rep.affine]
    print(f"  {coeffs}: affine {pts}, rational points at infinity: {rep.infinite_points}")
print("  (bounded search: completeness beyond the height box is not claimed)")
