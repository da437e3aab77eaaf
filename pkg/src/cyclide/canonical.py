"""Canonical-form data recovery for recognized Dupin cyclides.

Quartics: the distinguished eigenvalue A1 (pinned by the eigenvector role of
e when e != 0), the remaining pair (A2, A3), and the squared canonical
parameters (alpha^2, gamma^2, delta^2, alpha*gamma*delta).  Cubics: the
recentering shift and the parameter pair (p, q).

Float mode computes at unit weighted sup-norm and rescales results back, so
tolerance checks are scale-free; exact mode stays closed over the rationals
and demands perfect-square discriminants (generator-produced inputs always
satisfy this).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .core import (SIGMA12, SIGMA13, DarbouxCoefficients, EuclideanMotion,
                   apply_motion, apply_permutation, weighted_rescale)
from .errors import (ComplexRoots, Inconsistent, IrrationalSpectrum,
                     PreconditionError, ZeroCubicPart)
from .invariants import base_invariants
from .recognizer import TolerancePolicy, weighted_sup_norm
from .scalar import Scalar, exact_sqrt


@dataclass(frozen=True)
class SpectralData:
    """Eigenvalue triple of the canonical diagonal form plus D^2 and F.

    A1 is the eigenvalue whose eigenvector carries the linear part; the pair
    A2 <= A3 is an artifact ordering convention.
    """

    A1: Scalar
    A2: Scalar
    A3: Scalar
    Dsq: Scalar
    F: Scalar


@dataclass(frozen=True)
class CanonicalQuartic:
    """Squared canonical parameters; agd = alpha*gamma*delta >= 0."""

    alpha_sq: Scalar
    gamma_sq: Scalar
    delta_sq: Scalar
    agd: Scalar


@dataclass(frozen=True)
class CanonicalCubic:
    """Parameter pair p <= q and the recentering translation.

    Applying a pure translation by `shift` to the input coefficients yields
    the rotated-canonical form (no residual translation terms).
    """

    p: Scalar
    q: Scalar
    shift: Tuple[Scalar, Scalar, Scalar]


def _gauge(c: DarbouxCoefficients, pol: TolerancePolicy):
    """(working tuple, scale s): float mode rescales to unit weighted norm."""
    if pol.exact:
        return c, Fraction(1)
    s = weighted_sup_norm(c)
    if s == 0:
        return c, 1.0
    return weighted_rescale(c, 1.0 / s), s


def _a1_at_scale(work: DarbouxCoefficients, pol: TolerancePolicy) -> Scalar:
    inv = base_invariants(work)
    c1, c2, c3 = work.c
    d1, d2, d3 = work.d
    e1, e2, e3 = work.e
    f0 = work.f0
    w14 = inv.W1 + 4 * f0
    h2_lead = inv.C0 ** 2 + 4 * inv.W1 + 12 * f0

    if pol.nonzero(e1):
        a1 = (c1 * e1 + d3 * e2 + d2 * e3) / e1
    elif pol.nonzero(e2):
        a1 = (d3 * e1 + c2 * e2 + d1 * e3) / e2
    elif pol.nonzero(e3):
        a1 = (d2 * e1 + d1 * e2 + c3 * e3) / e3
    elif pol.nonzero(w14):
        a1 = -(inv.W2 - inv.C0 * inv.W1 - 4 * inv.E0) / (2 * w14)
    elif pol.nonzero(h2_lead):
        a1 = (inv.C0 ** 3 - 4 * inv.C0 * f0 + 4 * inv.E0) / h2_lead
    else:
        # on this stratum H3 = (A1 - C0)^2: double root
        a1 = inv.C0

    residuals = {
        "G1": -e1 * a1 + c1 * e1 + d3 * e2 + d2 * e3,
        "G2": -e2 * a1 + d3 * e1 + c2 * e2 + d1 * e3,
        "G3": -e3 * a1 + d2 * e1 + d1 * e2 + c3 * e3,
        "H1": 2 * w14 * a1 + inv.W2 - inv.C0 * inv.W1 - 4 * inv.E0,
        "H2": h2_lead * a1 - inv.C0 ** 3 + 4 * inv.C0 * f0 - 4 * inv.E0,
        "H3": a1 * a1 - 2 * inv.C0 * a1 + inv.C0 ** 2 - inv.W1 - 4 * f0,
        "charpoly": a1 ** 3 - inv.C0 * a1 ** 2 + inv.W1 * a1 - inv.W2,
    }
    # a1 has weighted degree 2; at unit gauge a loose constant absorbs the
    # division noise of the guard branches
    loose = TolerancePolicy(pol.mode, pol.tau_rel * 100) if not pol.exact else pol
    bad = {k: v for k, v in residuals.items() if loose.nonzero(v)}
    if bad:
        raise Inconsistent(f"A1 system has no common solution: {bad}")
    return a1


def _a23_at_scale(work: DarbouxCoefficients, a1: Scalar,
                  pol: TolerancePolicy) -> Tuple[Scalar, Scalar]:
    inv = base_invariants(work)
    p_lin = a1 - inv.C0
    q_const = inv.W1 - inv.C0 * a1 + a1 * a1
    disc = p_lin * p_lin - 4 * q_const
    if pol.exact:
        if disc < 0:
            raise ComplexRoots(f"negative discriminant {disc}: no real spectrum")
        root = exact_sqrt(Fraction(disc))
        if root is None:
            raise IrrationalSpectrum(
                f"discriminant {disc} is not a perfect square; use float mode")
        return (-p_lin - root) / 2, (-p_lin + root) / 2
    if disc < 0:
        scale = max(1.0, p_lin * p_lin, abs(q_const))
        if disc < -100 * pol.tau_rel * scale:
            raise ComplexRoots(f"negative discriminant {disc}")
        disc = 0.0
    root = math.sqrt(disc)
    if p_lin >= 0:
        r1 = (-p_lin - root) / 2
        r2 = q_const / r1 if r1 != 0 else -p_lin - r1
    else:
        r2 = (-p_lin + root) / 2
        r1 = q_const / r2 if r2 != 0 else -p_lin - r2
    return (r1, r2) if r1 <= r2 else (r2, r1)


def recover_A1(c: DarbouxCoefficients, pol: TolerancePolicy) -> Scalar:
    """Distinguished eigenvalue from the linear system {G1,G2,G3,H1,H2,H3}.

    Branch order: eigenvector equations G_i when some e_i != 0; else H1 when
    W1 + 4 f0 != 0; else H2 when C0^2 + 4 W1 + 12 f0 != 0; else the double
    root A1 = C0 of H3.  The candidate must satisfy the whole system and the
    characteristic polynomial, else Inconsistent (non-Dupin input or too
    tight a tolerance).
    """
    work, s = _gauge(c, pol)
    return _a1_at_scale(work, pol) * s * s


def recover_A23(c: DarbouxCoefficients, a1: Scalar,
                pol: TolerancePolicy) -> Tuple[Scalar, Scalar]:
    """The other two eigenvalues: roots of X^2 + (A1-C0) X + W1 - C0 A1 + A1^2,
    ordered A2 <= A3; float roots use the stabilized quadratic formula and a
    slightly-negative discriminant snaps to zero (boundary double roots)."""
    work, s = _gauge(c, pol)
    k2 = s * s
    r1, r2 = _a23_at_scale(work, a1 / k2, pol)
    return r1 * k2, r2 * k2


def spectral_data(c: DarbouxCoefficients, pol: TolerancePolicy) -> SpectralData:
    """Full spectral recovery plus the closure checks: elementary symmetric
    functions equal C0, W1, W2; Dsq = 4 E0; F = f0."""
    work, s = _gauge(c, pol)
    a1 = _a1_at_scale(work, pol)
    a2, a3 = _a23_at_scale(work, a1, pol)
    inv = base_invariants(work)
    dsq = -(a2 + a3) * (a1 - a2) * (a1 - a3)
    f = (a2 * a2 + a3 * a3 + a2 * a3 - a1 * a2 - a1 * a3) / 4
    checks = {"Dsq-4E0": dsq - 4 * inv.E0, "F-f0": f - work.f0,
              "sym1": a1 + a2 + a3 - inv.C0,
              "sym2": a1 * a2 + a1 * a3 + a2 * a3 - inv.W1,
              "sym3": a1 * a2 * a3 - inv.W2}
    loose = pol if pol.exact else TolerancePolicy(pol.mode, pol.tau_rel * 100)
    bad = {k: v for k, v in checks.items() if loose.nonzero(v)}
    if bad:
        raise Inconsistent(f"spectral closure failed: {bad}")
    k2 = s * s
    return SpectralData(A1=a1 * k2, A2=a2 * k2, A3=a3 * k2,
                        Dsq=dsq * k2 ** 3, F=f * k2 ** 2)


def canonical_quartic_params(s: SpectralData) -> CanonicalQuartic:
    """alpha^2 = (A3-A1)/4, gamma^2 = (A2-A1)/4, delta^2 = -(A2+A3)/4;
    agd = sqrt(alpha^2 gamma^2 delta^2) taken nonnegative (flipping the sign
    of any canonical parameter is a symmetry of the surface)."""
    alpha_sq = (s.A3 - s.A1) / 4
    gamma_sq = (s.A2 - s.A1) / 4
    delta_sq = -(s.A2 + s.A3) / 4
    prod = alpha_sq * gamma_sq * delta_sq
    if isinstance(prod, Fraction):
        agd = exact_sqrt(prod)
        if agd is None:
            raise IrrationalSpectrum(
                f"alpha^2*gamma^2*delta^2 = {prod} is not a perfect square; use float mode")
    else:
        agd = math.sqrt(max(prod, 0.0))
    return CanonicalQuartic(alpha_sq=alpha_sq, gamma_sq=gamma_sq,
                            delta_sq=delta_sq, agd=agd)


def cubic_shift(c: DarbouxCoefficients) -> Tuple[Scalar, Scalar, Scalar]:
    """Recentering translation for a cubic: applying a pure translation by
    this vector removes the shift the surface carries (B0-homogenized closed
    form of the per-axis solution, odd under the index permutations)."""
    if base_invariants(c).B0 == 0:
        raise ZeroCubicPart("B0 = 0")

    def t_formula(cc: DarbouxCoefficients) -> Scalar:
        i = base_invariants(cc)
        return ((-cc.b1 * cc.c2 - cc.b1 * cc.c3 + cc.b2 * cc.d3 + cc.b3 * cc.d2)
                / (2 * i.B0) + cc.b1 * i.W3 / (2 * i.B0 ** 2))

    t1 = t_formula(c)
    t2 = t_formula(apply_permutation(c, SIGMA12))
    t3 = t_formula(apply_permutation(c, SIGMA13))
    return (-t1, -t2, -t3)


def canonical_cubic_params(c: DarbouxCoefficients,
                           pol: TolerancePolicy) -> CanonicalCubic:
    """Recenter, then read the pair from p+q = -C0_hat/(2 sqrt(B0)) and
    p q = -V/(4 B0) with V = C0_hat^2 - 4 W1_hat; ordered p <= q."""
    if not pol.is_zero(c.a0):
        raise PreconditionError("cubic parameters require a0 = 0")
    shift = cubic_shift(c)
    recentered = apply_motion(c.replace(a0=0 * c.a0),
                              EuclideanMotion.translation_by(shift))
    inv = base_invariants(recentered)
    if inv.B0 == 0:
        raise ZeroCubicPart("B0 = 0")
    if pol.exact:
        lam = exact_sqrt(Fraction(inv.B0))
        if lam is None:
            raise IrrationalSpectrum(
                f"B0 = {inv.B0} is not a perfect square; use float mode")
    else:
        lam = math.sqrt(float(inv.B0))
    psum = -inv.C0 / (2 * lam)
    v = inv.C0 ** 2 - 4 * inv.W1
    pprod = -v / (4 * inv.B0)
    disc = psum * psum - 4 * pprod
    if pol.exact:
        if disc < 0:
            raise ComplexRoots(f"negative (p,q) discriminant {disc}")
        root = exact_sqrt(Fraction(disc))
        if root is None:
            raise IrrationalSpectrum(
                f"(p-q)^2 = {disc} is not a perfect square; use float mode")
    else:
        if disc < 0:
            scale = max(1.0, abs(float(pprod)))
            if disc < -100 * pol.tau_rel * scale:
                raise ComplexRoots(f"negative (p,q) discriminant {disc}")
            disc = 0.0
        root = math.sqrt(disc)
    p = (psum - root) / 2
    q = (psum + root) / 2
    return CanonicalCubic(p=p, q=q, shift=shift)
