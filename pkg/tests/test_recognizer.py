"""Decision procedure: case logic, oracle agreement, invariances and the
float tolerance policy."""
import random
from fractions import Fraction

import pytest

from conftest import CUBIC22, TORUS21, rand_fraction, random_coefficients
from cyclide import (DarbouxCoefficients, EuclideanMotion, TolerancePolicy,
                     apply_motion, normalize_quartic, recognize,
                     recognize_cubic, recognize_quadric,
                     recognize_quartic_cases, recognize_quartic_oracle,
                     weighted_rescale)
from cyclide.errors import NotNormalized, ZeroInput
from cyclide.genkit import (generate_cubic_dupin, generate_quartic_dupin,
                            perturb_off_variety, random_motion,
                            random_quartic_seed)
from cyclide.recognizer import DUPIN_CUBIC, DUPIN_QUADRIC, DUPIN_QUARTIC, NOT_DUPIN
from cyclide.scalar import FLOAT


class TestDispatch:
    def test_torus_case_e(self, pol):
        v = recognize(TORUS21, pol)
        assert v.kind == DUPIN_QUARTIC and v.case_label == "e"
        assert all(r == 0 for r in v.residuals.values())

    def test_cubic(self, pol):
        assert recognize(CUBIC22, pol).kind == DUPIN_CUBIC

    def test_plane_degenerate(self, pol):
        c = DarbouxCoefficients.make(a0=0, e=(0, 0, 1))
        assert recognize(c, pol).kind == "DegenerateInput"

    def test_zero_input(self, pol):
        with pytest.raises(ZeroInput):
            recognize(DarbouxCoefficients.make(), pol)


class TestQuarticCases:
    def test_zero_point_case_d(self, pol):
        v = recognize_quartic_cases(DarbouxCoefficients.make(a0=1), pol)
        assert v.kind == DUPIN_QUARTIC and v.case_label == "d"

    def test_case_a_witness(self, pol):
        c = DarbouxCoefficients.make(a0=1, c=(1, 0, 0), e=(1, 0, 0))
        v = recognize_quartic_cases(c, pol)
        assert v.kind == NOT_DUPIN and v.case_label == "a"
        assert v.witness == ("M1", -4)

    def test_requires_normalized(self, pol):
        with pytest.raises(NotNormalized):
            recognize_quartic_cases(TORUS21.scale(Fraction(2)), pol)

    def test_axis_cases_b_c(self, pol):
        # rotate a generated e1-active Dupin so e sits on the y then z axis
        from cyclide.genkit import QuarticSeed, canonical_quartic_coefficients
        base = canonical_quartic_coefficients(9, 1, 4, 6)
        assert base.e1 != 0
        rot_xy = EuclideanMotion.rotation_by(
            ((Fraction(0), Fraction(-1), Fraction(0)),
             (Fraction(1), Fraction(0), Fraction(0)),
             (Fraction(0), Fraction(0), Fraction(1))))
        v = recognize_quartic_cases(apply_motion(base, rot_xy), pol)
        assert v.kind == DUPIN_QUARTIC and v.case_label == "b"
        rot_xz = EuclideanMotion.rotation_by(
            ((Fraction(0), Fraction(0), Fraction(-1)),
             (Fraction(0), Fraction(1), Fraction(0)),
             (Fraction(1), Fraction(0), Fraction(0))))
        v = recognize_quartic_cases(apply_motion(base, rot_xz), pol)
        assert v.kind == DUPIN_QUARTIC and v.case_label == "c"

    def test_case_f(self, pol):
        # C0 = 0 stratum: c = (0, 1, -1) with d1 = 1 has W1 = -2, W2 = 0;
        # case (f) needs W1 + 3 f0 = 0 and (W2 - C0 W1)^2 = 4 f0^3
        c = DarbouxCoefficients.make(a0=1, c=(0, 1, -1), d=(1, 0, 0),
                                     f0=Fraction(2, 3))
        v = recognize_quartic_cases(c, pol)
        assert v.case_label == "f" and v.kind == NOT_DUPIN
        ok = c.replace(f0=Fraction(1, 2))  # W1+4f0 = 0 lands in case (d)
        v = recognize_quartic_cases(ok, pol)
        assert v.kind == DUPIN_QUARTIC and v.case_label == "d"


class TestOracle:
    def test_torus(self, pol):
        assert recognize_quartic_oracle(TORUS21, pol).kind == DUPIN_QUARTIC

    def test_witnesses(self, pol):
        c = DarbouxCoefficients.make(a0=1, c=(1, 0, 0), e=(1, 0, 0))
        v = recognize_quartic_oracle(c, pol)
        assert v.kind == NOT_DUPIN
        assert v.residuals["M1"] == -4 and v.residuals["N1"] == 8

    def test_zero(self, pol):
        assert recognize_quartic_oracle(
            DarbouxCoefficients.make(a0=1), pol).kind == DUPIN_QUARTIC

    def test_agreement_with_cases(self, pol, rng):
        agree = 0
        for i in range(60):
            if i % 2 == 0:
                c = generate_quartic_dupin(random_quartic_seed(rng))
            else:
                c = random_coefficients(rng, with_b=True)
            cn = normalize_quartic(c)
            a = recognize_quartic_cases(cn, pol, cross_check=False).is_dupin
            b = recognize_quartic_oracle(cn, pol).is_dupin
            assert a == b
            agree += 1
        assert agree == 60


class TestCubicRecognition:
    def test_cubic22(self, pol):
        assert recognize_cubic(CUBIC22, pol).kind == DUPIN_CUBIC

    def test_cubic22_wrong_f0(self, pol):
        v = recognize_cubic(CUBIC22.replace(f0=Fraction(1)), pol)
        assert v.kind == NOT_DUPIN and v.witness[0] == "4f0*B0^4-Q"

    def test_plane_and_point(self, pol):
        c = DarbouxCoefficients.make(a0=0, b=(1, 0, 0))
        assert recognize_cubic(c, pol).kind == DUPIN_CUBIC


class TestQuadricRecognition:
    def test_rotational_cone(self, pol):
        c = DarbouxCoefficients.make(a0=0, c=(1, 1, 2))
        v = recognize_quadric(c, pol)
        assert v.kind == DUPIN_QUADRIC
        assert "rotational" in v.notes and "singular" in v.notes

    def test_triaxial_rejected(self, pol):
        c = DarbouxCoefficients.make(a0=0, c=(1, 2, 3))
        v = recognize_quadric(c, pol)
        assert v.kind == NOT_DUPIN and v.witness == ("S0", -2)

    def test_smooth_sphere(self, pol):
        c = DarbouxCoefficients.make(a0=0, c=(1, 1, 1), f0=-1)
        v = recognize_quadric(c, pol)
        assert v.kind == NOT_DUPIN
        assert v.witness == ("detPhat", -1)
        assert "smooth rotational quadric" in v.notes


class TestInvariances:
    def test_projective(self, pol, rng):
        for _ in range(20):
            c = generate_quartic_dupin(random_quartic_seed(rng))
            lam = rand_fraction(rng, 1, 7, 3)
            assert recognize(c.scale(lam), pol).is_dupin
            bad = perturb_off_variety(c, rng)
            assert not recognize(bad.scale(lam), pol).is_dupin

    def test_motion(self, pol, rng):
        for _ in range(10):
            c = generate_quartic_dupin(random_quartic_seed(rng))
            m = random_motion(rng)
            assert recognize(apply_motion(c, m), pol).is_dupin

    def test_weighted(self, pol, rng):
        for _ in range(10):
            c = generate_quartic_dupin(random_quartic_seed(rng))
            lam = rand_fraction(rng, 1, 5, 2)
            assert recognize(weighted_rescale(c, lam), pol).is_dupin


class TestFloatPolicy:
    def _noisy(self, c, rng, rel):
        vals = [float(v) * (1.0 + rel * rng.uniform(-1, 1)) for v in c.astuple()]
        return DarbouxCoefficients(*vals)

    def test_tiny_noise_accepted(self, rng):
        fpol = TolerancePolicy(FLOAT, 1e-9)
        for _ in range(20):
            c = generate_quartic_dupin(random_quartic_seed(rng))
            noisy = self._noisy(c, rng, 1e-14)
            assert recognize(noisy, fpol).is_dupin

    def test_f0_bump_rejected(self, rng):
        # generic samples: at singular strata (double sphere) the equations
        # are critical and an f0 bump is quadratically suppressed
        fpol = TolerancePolicy(FLOAT, 1e-9)
        for _ in range(20):
            c = generate_quartic_dupin(random_quartic_seed(rng, smooth=True))
            f0 = float(c.f0)
            scale = max(abs(float(v)) for v in c.astuple())
            bumped = c.to_float().replace(f0=f0 + 1e-4 * max(abs(f0), scale))
            assert not recognize(bumped, fpol).is_dupin

    def test_noisy_zero_point_surface(self, rng):
        # a moved, rescaled rho^4 = 0 surface: normalization cancels all
        # fourteen entries to rounding noise; accepted as the point case
        from cyclide.genkit import QuarticSeed
        fpol = TolerancePolicy(FLOAT, 1e-9)
        seed = QuarticSeed(Fraction(0), Fraction(0), Fraction(0), Fraction(0),
                           random_motion(rng), Fraction(3))
        c = generate_quartic_dupin(seed)
        noisy = self._noisy(c, rng, 1e-14)
        v = recognize(noisy, fpol)
        assert v.is_dupin and v.case_label == "d"

    def test_float_cubic(self, rng):
        fpol = TolerancePolicy(FLOAT, 1e-9)
        c = generate_cubic_dupin(Fraction(3, 2), Fraction(-1, 3),
                                 random_motion(rng))
        noisy = self._noisy(c, rng, 1e-13)
        assert recognize(noisy, fpol).kind == DUPIN_CUBIC
