from fractions import Fraction as F

import pytest

from ratdyn.core import INFINITY, ProjectivePoint
from ratdyn.dynamics import (
    KBMap,
    QuadraticMap,
    apply_map,
    aut_is_c2,
    exact_period,
    kb_conjugate_equivalent,
    normalize_quadratic,
    orbit,
)
from ratdyn.errors import DomainError
from tests.conftest import sample_rationals


def pt(r):
    return ProjectivePoint.from_rational(F(r))


def vals(points):
    return [q.to_rational() for q in points]


def test_apply_examples():
    kb = KBMap(F(24, 7), F(-300, 7))
    assert apply_map(kb, pt(3)).to_rational() == F(-4)
    assert apply_map(kb, ProjectivePoint(0, 1)) == INFINITY
    assert apply_map(QuadraticMap(F(-13)), pt(3)).to_rational() == F(-4)


def test_infinity_fixed_everywhere():
    assert apply_map(QuadraticMap(F(7, 3)), INFINITY) == INFINITY
    assert apply_map(KBMap(F(-2, 5), F(9)), INFINITY) == INFINITY


def test_kb_requires_nonzero_parameters():
    with pytest.raises(DomainError):
        KBMap(F(0), F(1))
    with pytest.raises(DomainError):
        KBMap(F(1), F(0))


def test_aut_predicate():
    assert aut_is_c2(KBMap(F(2), F(3)))
    assert not aut_is_c2(KBMap(F(-1, 2), F(3)))


def test_orbit_examples():
    rep = orbit(QuadraticMap(F(-13)), pt(3), 64)
    assert rep.status == "periodic" and rep.tail == ()
    assert vals(rep.cycle) == [F(3), F(-4)]

    rep = orbit(KBMap(F(24, 7), F(-300, 7)), pt(3), 64)
    assert vals(rep.cycle) == [F(3), F(-4), F(-3), F(4)]

    rep = orbit(QuadraticMap(F(0)), pt(2), 5)
    assert rep.status == "bound-exceeded" and rep.cycle == ()
    assert vals(rep.tail) == [F(2), F(4), F(16), F(256), F(65536)]


def test_orbit_preperiodic_tail_split():
    rep = orbit(QuadraticMap(F(-2)), pt(0), 16)
    assert vals(rep.tail) == [F(0), F(-2)]
    assert vals(rep.cycle) == [F(2)]


def test_orbit_height_guard_reports_bound_exceeded():
    rep = orbit(QuadraticMap(F(0)), pt(2), 64, height_bound=10**6)
    assert rep.status == "bound-exceeded"
    assert len(rep.tail) < 64


def test_exact_period_examples():
    assert exact_period(QuadraticMap(F(-7, 4)), F(1, 2)) == 2
    assert exact_period(KBMap(F(4, 3), F(-10, 3)), F(2)) == 4
    assert exact_period(QuadraticMap(F(0)), F(0)) == 1
    # preperiodic point with tail has no exact period
    assert exact_period(QuadraticMap(F(-2)), F(0)) is None
    assert exact_period(QuadraticMap(F(0)), F(2)) is None
    # infinity is fixed
    assert exact_period(QuadraticMap(F(5)), INFINITY) == 1


def test_period_constant_along_cycle(rng):
    for c in sample_rationals(rng, 10, 8):
        m = QuadraticMap(c)
        for p in sample_rationals(rng, 5, 8):
            n = exact_period(m, p)
            if n is not None:
                img = apply_map(m, ProjectivePoint.from_rational(p))
                assert exact_period(m, img) == n


def test_kb_oddness_automorphism(rng):
    for k, b in zip(
        sample_rationals(rng, 15, 9, nonzero=True),
        sample_rationals(rng, 15, 9, nonzero=True),
    ):
        m = KBMap(k, b)
        for z in sample_rationals(rng, 6, 9, nonzero=True):
            left = apply_map(m, ProjectivePoint.from_rational(-z))
            right = apply_map(m, ProjectivePoint.from_rational(z))
            assert left.to_rational() == -right.to_rational()


def test_normalize_quadratic_examples():
    assert normalize_quadratic(F(1), F(0), F(-13)) == F(-13)
    assert normalize_quadratic(F(2), F(2), F(1)) == F(2)
    assert normalize_quadratic(F(1), F(-1), F(0)) == F(-3, 4)
    with pytest.raises(DomainError, match="not quadratic"):
        normalize_quadratic(F(0), F(1), F(1))


def test_normalize_quadratic_conjugation_identity(rng):
    # oracle: with l(z) = Az + B/2, the identity l(phi(z)) == psi(l(z)) must
    # hold pointwise, so l transports every orbit of phi to an orbit of psi
    for _ in range(20):
        a = sample_rationals(rng, 1, 6, nonzero=True)[0]
        b, c = sample_rationals(rng, 2, 6)
        cprime = normalize_quadratic(a, b, c)
        for z in sample_rationals(rng, 5, 6):
            phi_z = a * z * z + b * z + c
            ell = lambda w: a * w + b / 2
            psi = lambda w: w * w + cprime
            assert ell(phi_z) == psi(ell(z))


def test_kb_conjugate_equivalent_examples():
    assert kb_conjugate_equivalent(KBMap(F(5), F(3)), KBMap(F(5), F(12)))
    assert not kb_conjugate_equivalent(KBMap(F(5), F(3)), KBMap(F(5), F(6)))
    assert not kb_conjugate_equivalent(KBMap(F(1, 2), F(3)), KBMap(F(1, 3), F(3)))


def test_conjugate_equivalent_maps_transport_cycles():
    # z -> s z carries cycles of (k, b) to cycles of (k, b s^2)
    base = KBMap(F(4, 3), F(-2, 15))
    s = F(5)
    scaled = KBMap(base.k, base.b * s * s)
    assert kb_conjugate_equivalent(scaled, base)
    rep = orbit(base, pt(F(1, 5)))
    scaled_cycle = [s * q.to_rational() for q in rep.cycle]
    rep2 = orbit(scaled, ProjectivePoint.from_rational(scaled_cycle[0]))
    assert [q.to_rational() for q in rep2.cycle] == scaled_cycle


def test_orbit_determinism():
    m = KBMap(F(24, 7), F(-300, 7))
    assert orbit(m, pt(3)) == orbit(m, pt(3))
