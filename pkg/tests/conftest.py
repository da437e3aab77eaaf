import random
from fractions import Fraction

import pytest

from cyclide import DarbouxCoefficients, TolerancePolicy
from cyclide.scalar import EXACT, FLOAT

# The R=2, r=1 ring torus (x^2+y^2+z^2+3)^2 = 16(x^2+y^2):
# c1 = c2 = -2R^2-2r^2 = -10, c3 = 2R^2-2r^2 = 6, f0 = (R^2-r^2)^2 = 9.
TORUS21 = DarbouxCoefficients.make(a0=1, c=(-10, -10, 6), f0=9)

# Cubic canonical surface for (p, q) = (2, -2):
# b = (1,0,0), c = (-(p+q), -p, -q) = (0, -2, 2), e1 = pq/4 = -1.
CUBIC22 = DarbouxCoefficients.make(a0=0, b=(1, 0, 0), c=(0, -2, 2), e=(-1, 0, 0))


@pytest.fixture
def torus21():
    return TORUS21


@pytest.fixture
def cubic22():
    return CUBIC22


@pytest.fixture
def pol():
    return TolerancePolicy(EXACT)


@pytest.fixture
def fpol():
    return TolerancePolicy(FLOAT, 1e-9)


@pytest.fixture
def rng():
    # fixed seed: failures reproduce; bump only deliberately
    return random.Random(20240811)


def rand_fraction(rng, lo=-6, hi=6, den=4):
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def random_coefficients(rng, a0=1, with_b=False, with_e=True):
    """Generic (usually non-Dupin) rational coefficient tuple."""
    f = lambda: rand_fraction(rng)
    return DarbouxCoefficients.make(
        a0=a0,
        b=(f(), f(), f()) if with_b else (0, 0, 0),
        c=(f(), f(), f()),
        d=(f(), f(), f()),
        e=(f(), f(), f()) if with_e else (0, 0, 0),
        f0=f())
