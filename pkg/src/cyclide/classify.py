"""Real-point classification of Dupin cyclides and the Moebius invariant J0.

Quartic classification works on the squared canonical parameters
(s, t, u) = (alpha^2, gamma^2, delta^2) derived from the spectral triple;
the semi-algebraic conditions partition the admissible set {s*t*u >= 0}.
Every admissible region, edge and vertex of the parameter diagram receives
exactly one label (three boundary strata that the coefficient-level
condition list leaves out are included here: the horn-torus edge, the
one-point edge at s = t < 0 <= u, and sphere-with-point taking precedence
over the touching-spheres line).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .canonical import SpectralData
from .core import DarbouxCoefficients
from .errors import FormulaDisagreement, PreconditionError
from .invariants import base_invariants
from .recognizer import TolerancePolicy, weighted_sup_norm
from .scalar import Scalar


class SurfaceClass(enum.Enum):
    SMOOTH_RING = "SM"
    SPINDLE = "SP"
    HORN = "H"
    TWO_TOUCHING_SPHERES = "R"
    SPHERE_AND_POINT = "Q"
    DOUBLE_SPHERE = "D"
    CIRCLE = "C"
    ONE_POINT = "P"
    TWO_POINTS = "PP"
    NO_REAL_POINTS = "NP"
    # cubic-only reducible surfaces
    SPHERE_TANGENT_PLANE = "ST"
    PLANE_AND_POINT = "PL"

    @property
    def code(self) -> str:
        return self.value


J0_FINITE = "finite"
J0_MINUS_INF = "minus_infinity"
J0_UNDEFINED = "undefined"


@dataclass(frozen=True)
class J0Value:
    kind: str
    value: Optional[Scalar] = None

    @classmethod
    def finite(cls, v: Scalar) -> "J0Value":
        return cls(J0_FINITE, v)

    @classmethod
    def minus_infinity(cls) -> "J0Value":
        return cls(J0_MINUS_INF)

    @classmethod
    def undefined(cls) -> "J0Value":
        return cls(J0_UNDEFINED)


def _squares(s: SpectralData) -> Tuple[Scalar, Scalar, Scalar]:
    return ((s.A3 - s.A1) / 4, (s.A2 - s.A1) / 4, -(s.A2 + s.A3) / 4)


def classify_quartic(sd: SpectralData, pol: TolerancePolicy) -> SurfaceClass:
    label, _ = classify_quartic_report(sd, pol)
    return label


def classify_quartic_report(sd: SpectralData,
                            pol: TolerancePolicy) -> Tuple[SurfaceClass, bool]:
    """(label, ambiguous): ambiguous flags a float equality decided within
    tolerance, i.e. the input sits on (or hugs) a stratification boundary."""
    s, t, u = _squares(sd)
    if pol.exact:
        def sgn(v):
            return (v > 0) - (v < 0)
        scale = 1
    else:
        scale = max(1.0, abs(float(s)), abs(float(t)), abs(float(u)))

        def sgn(v):
            if abs(v) <= pol.tau_rel * scale:
                return 0
            return (v > 0) - (v < 0)

    ambiguous = (not pol.exact) and any(
        0 < abs(float(v)) <= pol.tau_rel * scale
        for v in (s - t, u - s, u - t, s, t, u))

    m1, m2 = (s, t) if sgn(s - t) <= 0 else (t, s)  # m1 = min, m2 = max
    if sgn(s) * sgn(t) * sgn(u) < 0:
        raise PreconditionError(
            f"inadmissible parameters (s,t,u)=({s},{t},{u}): product < 0 means "
            "the implicit equation is not real")

    if sgn(s - t) == 0:
        if sgn(u - s) == 0:
            if sgn(s) > 0:
                return SurfaceClass.SPHERE_AND_POINT, ambiguous
            return SurfaceClass.ONE_POINT, ambiguous  # origin
        if sgn(s) > 0:
            return SurfaceClass.TWO_TOUCHING_SPHERES, ambiguous
        if sgn(s) == 0:
            if sgn(u) > 0:
                return SurfaceClass.DOUBLE_SPHERE, ambiguous
            return SurfaceClass.NO_REAL_POINTS, ambiguous  # (0,0,u<0)
        return SurfaceClass.ONE_POINT, ambiguous  # s = t < 0 <= u

    if sgn(u - m2) == 0:
        if sgn(m2) > 0:
            return SurfaceClass.HORN, ambiguous  # includes horn torus m1 = 0
        return SurfaceClass.TWO_POINTS, ambiguous  # u = m2 = 0 > m1
    if sgn(u - m1) == 0:
        if sgn(m1) > 0:
            return SurfaceClass.HORN, ambiguous
        if sgn(m1) == 0:
            return SurfaceClass.CIRCLE, ambiguous
        return SurfaceClass.ONE_POINT, ambiguous  # u = m1 < 0 <= m2
    if sgn(u - m1) > 0 and sgn(u - m2) < 0:
        if sgn(m1) >= 0:
            return SurfaceClass.SMOOTH_RING, ambiguous
        return SurfaceClass.TWO_POINTS, ambiguous  # m1 < u <= 0 <= m2
    if sgn(u - m1) < 0:
        if sgn(m1) > 0:
            return SurfaceClass.SPINDLE, ambiguous
        return SurfaceClass.NO_REAL_POINTS, ambiguous  # u < m1 <= 0
    # u > m2
    if sgn(m1) >= 0:
        return SurfaceClass.SPINDLE, ambiguous
    return SurfaceClass.TWO_POINTS, ambiguous  # m1 < m2 <= 0 <= u


def classify_cubic(p: Scalar, q: Scalar, pol: TolerancePolicy) -> SurfaceClass:
    pq = p * q
    if pol.nonzero(pq):
        if pq < 0:
            return SurfaceClass.SMOOTH_RING
        if pol.nonzero(p - q):
            return SurfaceClass.SPINDLE
        return SurfaceClass.SPHERE_TANGENT_PLANE
    if pol.nonzero(p - q):
        return SurfaceClass.HORN
    if pol.nonzero(p) or pol.nonzero(q):
        return SurfaceClass.SPHERE_TANGENT_PLANE
    return SurfaceClass.PLANE_AND_POINT


def _fraction_vote(num: Scalar, den: Scalar, pol: TolerancePolicy) -> J0Value:
    nz = pol.is_zero(num)
    dz = pol.is_zero(den)
    if dz and nz:
        return J0Value.undefined()
    if dz:
        return J0Value.minus_infinity()
    return J0Value.finite(num / den)


def j0_quartic(c: DarbouxCoefficients, sd: SpectralData,
               pol: TolerancePolicy) -> J0Value:
    """All three printed forms; they must agree.

    Spectral: (A1-2A2-A3)(A2+2A3-A1)/(A2-A3)^2, invariant under A2<->A3.
    A1-based: (7A1^2-8C0A1+2C0^2+W1)/(3A1^2-2C0A1-C0^2+4W1).
    Coefficient-level: the C0/W1/W2/E0/f0 rational form.
    Zero denominator with nonzero numerator means minus infinity (touching
    spheres, double sphere); 0/0 is undefined (sphere with a point on it).
    """
    a1, a2, a3 = sd.A1, sd.A2, sd.A3
    if pol.exact:
        scale_pol = pol
        work = c
        k2 = Fraction(1)
    else:
        s = weighted_sup_norm(c)
        s = s if s != 0 else 1.0
        from .recognizer import _float_gauge
        work = _float_gauge(c)
        k2 = s * s
        scale_pol = pol
        a1, a2, a3 = a1 / k2, a2 / k2, a3 / k2

    votes = [
        _fraction_vote((a1 - 2 * a2 - a3) * (a2 + 2 * a3 - a1), (a2 - a3) ** 2, scale_pol),
    ]
    inv = base_invariants(work)
    C0, W1, W2, E0, f0 = inv.C0, inv.W1, inv.W2, inv.E0, work.f0
    votes.append(_fraction_vote(
        7 * a1 * a1 - 8 * C0 * a1 + 2 * C0 ** 2 + W1,
        3 * a1 * a1 - 2 * C0 * a1 - C0 ** 2 + 4 * W1, scale_pol))
    votes.append(_fraction_vote(
        (4 * f0 - C0 ** 2) * (28 * f0 + C0 ** 2) + 4 * (8 * f0 + C0 ** 2) * W1
        - 12 * C0 * (W2 - 2 * E0),
        12 * f0 * (4 * f0 - C0 ** 2) + (28 * f0 + C0 ** 2) * W1
        - 8 * C0 * (W2 - 2 * E0), scale_pol))
    # A2 <-> A3 swap leaves the spectral form unchanged
    swap = _fraction_vote((a1 - 2 * a3 - a2) * (a3 + 2 * a2 - a1), (a3 - a2) ** 2,
                          scale_pol)
    votes.append(swap)

    kinds = {v.kind for v in votes}
    if kinds == {J0_FINITE}:
        vals = [v.value for v in votes]
        if pol.exact:
            if len(set(vals)) != 1:
                raise FormulaDisagreement(f"J0 formulas disagree: {vals}")
            return J0Value.finite(vals[0])
        ref = vals[0]
        tol = 1e4 * pol.tau_rel * max(1.0, abs(ref))
        if any(abs(v - ref) > tol for v in vals[1:]):
            raise FormulaDisagreement(f"J0 formulas disagree: {vals}")
        return J0Value.finite(ref)
    if len(kinds) != 1:
        # degenerate strata may zero one fraction's numerator and denominator
        # while another stays decisive; a decisive vote wins, but finite and
        # minus-infinity verdicts must not coexist
        if J0_FINITE in kinds and J0_MINUS_INF in kinds:
            raise FormulaDisagreement(f"J0 formulas disagree: {votes}")
        decisive = [v for v in votes if v.kind != J0_UNDEFINED]
        if not decisive:
            return J0Value.undefined()
        return decisive[0]
    return votes[0]


def j0_cubic(c: DarbouxCoefficients, pol: TolerancePolicy) -> J0Value:
    """Weight-8 rational form in the raw cubic coefficients."""
    work = c
    if not pol.exact:
        from .recognizer import _float_gauge
        gauge = max(abs(float(v)) for v in c.b)
        if gauge == 0:
            raise PreconditionError("cubic J0 requires b != 0")
        work = _float_gauge(DarbouxCoefficients(*[float(v) / gauge for v in c.astuple()]))
    b1, b2, b3 = work.b
    c1, c2, c3 = work.c
    d1, d2, d3 = work.d
    e1, e2, e3 = work.e
    inv = base_invariants(work)
    B0, C0 = inv.B0, inv.C0
    y5 = d1 * d1 + d2 * d2 + d3 * d3 - 4 * (b1 * e1 + b2 * e2 + b3 * e3)
    y6 = (5 * (b1 * b1 * d1 * d1 + b2 * b2 * d2 * d2 + b3 * b3 * d3 * d3)
          + 10 * b1 * b2 * (c3 * d3 - d1 * d2)
          + 10 * b1 * b3 * (c2 * d2 - d1 * d3)
          + 10 * b2 * b3 * (c1 * d1 - d2 * d3)
          - 2 * C0 * (b1 * b2 * d3 + b1 * b3 * d2 + b2 * b3 * d1)
          - b1 * b1 * (c1 * c1 + 4 * c2 * c3)
          - b2 * b2 * (c2 * c2 + 4 * c1 * c3)
          - b3 * b3 * (c3 * c3 + 4 * c1 * c2))
    cc = c1 * c2 + c1 * c3 + c2 * c3
    num = 3 * (B0 * (-2 * y5 + cc) + y6)
    den = B0 * (y5 + 2 * (c1 * c1 + c2 * c2 + c3 * c3) + cc) + 2 * y6
    return _fraction_vote(num, den, pol)


TWO_PI_SQ = 2 * math.pi ** 2


def willmore_energy(j: J0Value):
    """pi^2 / sqrt(J0) for finite positive J0 (2*pi^2 at the maximum 1/4);
    None marks the bending energy as not applicable (J0 <= 0 or no smooth
    torus-type real surface)."""
    if j.kind != J0_FINITE or j.value is None or j.value <= 0:
        return None
    return math.pi ** 2 / math.sqrt(float(j.value))
