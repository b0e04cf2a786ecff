"""Exact rational dynamics of z^2 + c and kz + b/z over Q.

The library computes, classifies and cross-verifies rational periodic
points of the two degree-2 families: exact orbits, period and dynatomic
polynomials, closed-form classifications with their one-parameter families,
generators for maps sharing a periodic point, and height-bounded search
oracles.  All arithmetic is exact (``fractions.Fraction``); nothing is ever
rendered as a decimal.
"""

from .core import (
    INFINITY,
    ProjectivePoint,
    Rational,
    count_rationals,
    enumerate_rationals,
    format_point,
    format_rational,
    height,
    is_rational_square,
    normalize_rational,
    parse_point,
    parse_rational,
    rational_sqrt,
)
from .dynamics import (
    KBMap,
    Map,
    OrbitReport,
    QuadraticMap,
    apply_map,
    aut_is_c2,
    exact_period,
    kb_conjugate_equivalent,
    normalize_quadratic,
    orbit,
)
from .dynatomic import (
    IteratePair,
    dynatomic_polynomial,
    iterate_pair,
    moebius,
    period4_dynatomic_factors,
    period_polynomial,
    periodic_points_exact,
    rational_roots,
)
from .classification import (
    KBPeriod4Family,
    Period3Family,
    kb_map_with_fixed_and_period2,
    kb_period4_cycle,
    kb_period4_family,
    kb_periodic_points,
    kb_witness,
    period3_family,
    period3_tau_cubics,
    quad_period3_cycle,
    quad_periodic_points,
    quad_witness,
)
from .errors import DomainError
from .polynomials import HomogeneousPoly, Poly
from .search import (
    DEFAULT_BOUNDS,
    QuarticCurve,
    QuarticReport,
    ScanReport,
    quartic_rational_points,
    scan_intersection_bound,
    scan_kb_periods,
    scan_quadratic_periods,
)
from .simultaneous import (
    KBFamilyDescriptor,
    KBPairQuadruple,
    MixedFamilyTriple,
    SharedMapEntry,
    SimultaneousMapEntry,
    SimultaneousPointResult,
    kb_pair_family,
    maps_with_both_periodic,
    orbit_intersection,
    quadratics_with_periodic_point,
    triples_fixed_point,
    triples_period2,
    triples_period3,
    two_point_intersection_kb,
    two_point_intersection_mixed,
    two_point_intersection_period3,
)

__version__ = "0.1.0"
