import random
from fractions import Fraction

import pytest


def sample_rationals(rng, count, bound, nonzero=False, exclude=()):
    """Seeded sample of reduced rationals with height <= bound."""
    out = []
    while len(out) < count:
        n = rng.randint(-bound, bound)
        d = rng.randint(1, bound)
        r = Fraction(n, d)
        if max(abs(r.numerator), r.denominator) > bound:
            continue
        if nonzero and r == 0:
            continue
        if r in exclude:
            continue
        out.append(r)
    return out


@pytest.fixture
def rng():
    return random.Random(20110)
