"""Exact ground-truth generators, perturbers and surface-point samplers.

Everything here is the brute-force oracle side of the test architecture:
surfaces built from known canonical parameters and exact rational motions,
against which the recognizer and canonicalizer are checked.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .canonical import spectral_data
from .classify import SurfaceClass, classify_quartic
from .core import (DarbouxCoefficients, EuclideanMotion, apply_motion,
                   normalize_quartic, polynomial_from_coefficients,
                   weighted_rescale)
from .errors import (IrrationalSpectrum, NoRealPoints, PreconditionError,
                     SeedInvariantViolation)
from .recognizer import TolerancePolicy, recognize
from .scalar import EXACT, FLOAT, exact_sqrt


@dataclass(frozen=True)
class QuarticSeed:
    """Canonical squares (s,t,u) = (alpha^2, gamma^2, delta^2), m = alpha*gamma*delta,
    then an exact motion and a weighted rescale."""

    s: Fraction
    t: Fraction
    u: Fraction
    m: Fraction
    motion: EuclideanMotion
    lam: Fraction = Fraction(1)

    def __post_init__(self):
        if self.m * self.m != self.s * self.t * self.u:
            raise SeedInvariantViolation(
                f"m^2 = {self.m * self.m} != s*t*u = {self.s * self.t * self.u}")


def quaternion_rotation(a: int, b: int, c: int, d: int) -> EuclideanMotion:
    """Exact rational rotation from a nonzero integer quaternion."""
    n = Fraction(a * a + b * b + c * c + d * d)
    if n == 0:
        raise PreconditionError("zero quaternion")
    rows = (
        (a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c)),
        (2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b)),
        (2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d),
    )
    rows = tuple(tuple(Fraction(v) / n for v in row) for row in rows)
    return EuclideanMotion.rotation_by(rows)


_REFLECT = EuclideanMotion.rotation_by(
    ((Fraction(1), 0, 0), (0, Fraction(1), 0), (0, 0, Fraction(-1))))


def random_rotation(seed, reflect: Optional[bool] = None) -> EuclideanMotion:
    """Rational orthogonal matrix from a seeded random integer quaternion,
    optionally composed with a coordinate reflection to cover both O(3)
    components (reflect=None picks at random)."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    while True:
        quat = tuple(rng.randint(-5, 5) for _ in range(4))
        if any(quat):
            break
    rot = quaternion_rotation(*quat)
    if reflect is None:
        reflect = bool(rng.getrandbits(1))
    return rot.after(_REFLECT) if reflect else rot


def random_fraction(rng: random.Random, num=6, den=4) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_motion(rng: random.Random, translate: bool = True,
                  reflect: Optional[bool] = None) -> EuclideanMotion:
    rot = random_rotation(rng, reflect=reflect)
    if not translate:
        return rot
    t = tuple(random_fraction(rng) for _ in range(3))
    return EuclideanMotion(rot.rotation, t)


def canonical_quartic_coefficients(s, t, u, m) -> DarbouxCoefficients:
    """Translation-normalized coefficients of the canonical quartic:
    c = (-2(s+t+u), 2(t-s-u), 2(s-t-u)), e1 = 4m, f0 = (s-t-u)^2 - 4tu."""
    s, t, u, m = Fraction(s), Fraction(t), Fraction(u), Fraction(m)
    return DarbouxCoefficients.make(
        a0=1,
        c=(-2 * (s + t + u), 2 * (t - s - u), 2 * (s - t - u)),
        e=(4 * m, 0, 0),
        f0=(s - t - u) ** 2 - 4 * t * u)


def generate_quartic_dupin(seed: QuarticSeed) -> DarbouxCoefficients:
    """Guaranteed point of the quartic Dupin variety."""
    c = canonical_quartic_coefficients(seed.s, seed.t, seed.u, seed.m)
    c = apply_motion(c, seed.motion)
    return weighted_rescale(c, seed.lam)


def generate_cubic_dupin(p, q, motion: EuclideanMotion) -> DarbouxCoefficients:
    """Guaranteed cubic Dupin cyclide from the parabolic canonical form."""
    p, q = Fraction(p), Fraction(q)
    c = DarbouxCoefficients.make(
        a0=0, b=(1, 0, 0), c=(-(p + q), -p, -q), e=(p * q / 4, 0, 0))
    return apply_motion(c, motion)


def random_quartic_seed(rng: random.Random, motion: Optional[EuclideanMotion] = None,
                        smooth: bool = False, rescale: bool = True) -> QuarticSeed:
    """Admissible random seed: squares with zero or two sign flips keep
    m^2 = s*t*u solvable in the rationals (m = +/- product of the roots)."""
    if motion is None:
        motion = random_motion(rng)
    while True:
        a, b, c = (Fraction(rng.randint(0, 4)) for _ in range(3))
        if smooth:
            # 0 <= gamma^2 < delta^2 < alpha^2, all with rational product root
            lo, mid, hi = sorted((a, b, c))
            if not (lo < mid < hi):
                continue
            s, t, u = hi * hi, lo * lo, mid * mid
            m = hi * lo * mid
            break
        s, t, u = a * a, b * b, c * c
        m = a * b * c
        flips = rng.choice([(), (0, 1), (0, 2), (1, 2)])
        vals = [s, t, u]
        for i in flips:
            vals[i] = -vals[i]
        s, t, u = vals
        if m * m == s * t * u:
            break
    lam = Fraction(rng.choice([1, 1, 2, 3]), rng.choice([1, 1, 2])) if rescale else Fraction(1)
    return QuarticSeed(s=s, t=t, u=u, m=m, motion=motion, lam=lam)


def perturb_off_variety(c: DarbouxCoefficients, rng: random.Random,
                        max_attempts: int = 10) -> DarbouxCoefficients:
    """Add a random nonzero rational to one of e1, e2, e3, f0; resample the
    rare accidental returns to the variety (codimension 4 makes them measure
    zero along a generic line, but boundary strata exist)."""
    pol = TolerancePolicy(EXACT)
    for _ in range(max_attempts):
        field = rng.choice(["e1", "e2", "e3", "f0"])
        delta = random_fraction(rng)
        if delta == 0:
            continue
        cand = c.replace(**{field: getattr(c, field) + delta})
        try:
            if not recognize(cand, pol).is_dupin:
                return cand
        except Exception:
            continue
    raise PreconditionError(f"could not leave the variety in {max_attempts} attempts")


# --------------------------------------------------------------------------
# surface point sampling


def _rational_circle(rng: random.Random) -> Tuple[Fraction, Fraction]:
    """Rational point on the unit circle via the tangent half-angle map."""
    t = random_fraction(rng, num=8, den=5)
    den = 1 + t * t
    return ((1 - t * t) / den, 2 * t / den)


def _float_circle(rng: random.Random) -> Tuple[float, float]:
    ang = rng.uniform(0.0, 2.0 * math.pi)
    return (math.cos(ang), math.sin(ang))


def _residual_ok(c: DarbouxCoefficients, point, exact: bool) -> bool:
    poly = polynomial_from_coefficients(c)
    val = poly.evaluate(point)
    if exact:
        return val == 0
    scale = max(abs(float(v)) for v in c.astuple())
    norm = scale * (1.0 + sum(float(x) * float(x) for x in point)) ** 2
    return abs(float(val)) <= 1e-12 * norm


def _newton_polish(c: DarbouxCoefficients, point, steps: int = 3):
    """One-dimensional Newton along the gradient to squeeze out float error."""
    poly = polynomial_from_coefficients(c.to_float())
    pt = [float(v) for v in point]
    h = 1e-6
    for _ in range(steps):
        val = poly.evaluate(pt)
        grad = []
        for i in range(3):
            q = list(pt)
            q[i] += h
            grad.append((poly.evaluate(q) - val) / h)
        g2 = sum(g * g for g in grad)
        if g2 == 0:
            break
        step = val / g2
        pt = [p - step * g for p, g in zip(pt, grad)]
    return tuple(pt)


def _ring_cyclide_points(alpha, beta, gamma, delta, n, rng, exact):
    """Points of the canonical ring/spindle/horn family via the rational
    circle parametrization; alpha, beta, gamma, delta real, alpha > gamma."""
    pts = []
    attempts = 0
    while len(pts) < n and attempts < 20 * n + 50:
        attempts += 1
        cu, su = _rational_circle(rng) if exact else _float_circle(rng)
        cv, sv = _rational_circle(rng) if exact else _float_circle(rng)
        den = alpha - gamma * cu * cv
        if den == 0 or (not exact and abs(float(den)) < 1e-9):
            continue
        x = (delta * (gamma - alpha * cu * cv) + beta * beta * cu) / den
        y = beta * su * (alpha - delta * cv) / den
        z = beta * sv * (gamma * cu - delta) / den
        pts.append((x, y, z))
    return pts


def _sphere_points(center_x, radius, n, rng, exact):
    pts = []
    for _ in range(n):
        cu, su = _rational_circle(rng) if exact else _float_circle(rng)
        cv, sv = _rational_circle(rng) if exact else _float_circle(rng)
        pts.append((center_x + radius * cu,
                    radius * su * cv,
                    radius * su * sv))
    return pts


def _sqrt_mode(v, exact: bool):
    if exact:
        r = exact_sqrt(Fraction(v))
        if r is None:
            raise IrrationalSpectrum(
                f"sqrt({v}) is irrational; exact sampling impossible, use float input")
        return r
    return math.sqrt(max(float(v), 0.0))


def _canonical_points(sq, dsq, label, n, rng, exact):
    """Sample the canonical surface with squares sq = (s, t, u), linear
    coefficient D = +sqrt(dsq) >= 0."""
    s, t, u = sq
    if label == SurfaceClass.NO_REAL_POINTS:
        raise NoRealPoints("surface has no real points")
    if label in (SurfaceClass.SMOOTH_RING, SurfaceClass.SPINDLE, SurfaceClass.HORN):
        alpha = _sqrt_mode(s, exact)
        gamma = _sqrt_mode(t, exact)
        delta = _sqrt_mode(u, exact)
        beta = _sqrt_mode(s - t, exact)
        return _ring_cyclide_points(alpha, beta, gamma, delta, n, rng, exact)
    if label == SurfaceClass.CIRCLE:
        radius = _sqrt_mode(s, exact)
        out = []
        for _ in range(n):
            cu, su = _rational_circle(rng) if exact else _float_circle(rng)
            out.append((radius * cu, radius * su, 0 * radius))
        return out
    if label == SurfaceClass.DOUBLE_SPHERE:
        return _sphere_points(0 * u, _sqrt_mode(u, exact), n, rng, exact)
    if label in (SurfaceClass.TWO_TOUCHING_SPHERES, SurfaceClass.SPHERE_AND_POINT):
        alpha = _sqrt_mode(s, exact)
        delta = _sqrt_mode(u, exact)
        half = max(1, n // 2)
        pts = []
        if alpha - delta != 0:
            pts += _sphere_points(alpha, abs(alpha - delta), half, rng, exact)
        else:
            pts.append((alpha, 0 * alpha, 0 * alpha))
        pts += _sphere_points(-alpha, abs(alpha + delta), n - len(pts), rng, exact)
        return pts
    # point classes: complete the square on Amin
    a1 = -2 * (s + t + u)
    a2 = 2 * (t - s - u)
    a3 = 2 * (s - t - u)
    if a1 == 0 and a2 == 0 and a3 == 0:
        return [(0 * s, 0 * s, 0 * s)]
    amin = min(a1, a2, a3)
    d_lin = _sqrt_mode(dsq, exact)
    x0 = -d_lin / (2 * (a1 - amin)) if a1 != amin else 0 * s
    rho_sq = -amin / 2
    free_sq = rho_sq - x0 * x0
    if not exact:
        free_sq = max(float(free_sq), 0.0)
    free = _sqrt_mode(free_sq, exact)
    if amin == a2:
        pts = [(x0, free, 0 * s), (x0, -free, 0 * s)]
    else:
        pts = [(x0, 0 * s, free), (x0, 0 * s, -free)]
    uniq = []
    for p in pts:
        if p not in uniq:
            uniq.append(p)
    return uniq


def _exact_axis_frame(cn: DarbouxCoefficients, sd) -> Optional[List[Tuple]]:
    """Rows of R with cn(x) = canonical(Rx), for axis-aligned exact inputs
    (d = 0, e supported on one axis).  Returns None when not applicable."""
    if any(v != 0 for v in cn.d):
        return None
    nonzero_e = [i for i, v in enumerate(cn.e) if v != 0]
    if len(nonzero_e) > 1:
        return None
    targets = (sd.A1, sd.A2, sd.A3)
    diag = cn.c
    axes = [(Fraction(1), Fraction(0), Fraction(0)),
            (Fraction(0), Fraction(1), Fraction(0)),
            (Fraction(0), Fraction(0), Fraction(1))]
    import itertools
    for perm in itertools.permutations(range(3)):
        if tuple(diag[p] for p in perm) != targets:
            continue
        if nonzero_e:
            axis = nonzero_e[0]
            if perm[0] != axis:
                continue
            sign = 1 if cn.e[axis] > 0 else -1
        else:
            sign = 1
        rows = [axes[perm[0]], axes[perm[1]], axes[perm[2]]]
        rows[0] = tuple(sign * v for v in rows[0])
        return rows
    return None


def _float_frame(cn: DarbouxCoefficients, sd):
    import numpy as np
    c1, c2, c3 = (float(v) for v in cn.c)
    d1, d2, d3 = (float(v) for v in cn.d)
    P = np.array([[c1, d3, d2], [d3, c2, d1], [d2, d1, c3]])
    a1, a2, a3 = float(sd.A1), float(sd.A2), float(sd.A3)
    dsq = max(float(sd.Dsq), 0.0)
    dd = math.sqrt(dsq)
    scale = max(1.0, abs(a1), abs(a2), abs(a3))
    e2v = 2.0 * np.array([float(v) for v in cn.e])
    en = float(np.linalg.norm(e2v))
    if en > 1e-9 * scale ** 1.5:    # |2e| = D, weighted degree 3
        r1 = e2v / en
    else:
        w, V = np.linalg.eigh(P)
        idx = int(np.argmin(np.abs(w - a1)))
        r1 = V[:, idx]
    r1 = r1 / np.linalg.norm(r1)
    # orthonormal complement of r1
    basis = np.eye(3)
    q = basis[np.argmin(np.abs(basis @ r1))]
    q1 = q - (q @ r1) * r1
    q1 /= np.linalg.norm(q1)
    q2 = np.cross(r1, q1)
    M2 = np.array([[q1 @ P @ q1, q1 @ P @ q2], [q2 @ P @ q1, q2 @ P @ q2]])
    w2, V2 = np.linalg.eigh(M2)  # ascending: matches A2 <= A3
    r2 = V2[0, 0] * q1 + V2[1, 0] * q2
    r3 = V2[0, 1] * q1 + V2[1, 1] * q2
    return [tuple(map(float, r1)), tuple(map(float, r2)), tuple(map(float, r3))]


def sample_surface_points(c: DarbouxCoefficients, n: int, rng: random.Random):
    """Points on the real locus of a recognized Dupin quartic.

    Canonical tori/cyclides are sampled through their circle families with
    rational angles (exact residual 0 when the radii are rational); moved
    surfaces push canonical points through the recovered frame (float).
    Point classes return their finitely many points; NoRealPoints otherwise.
    """
    exact_in = c.is_exact()
    pol = TolerancePolicy(EXACT) if exact_in else TolerancePolicy(FLOAT)
    verdict = recognize(c, pol)
    if verdict.kind != "DupinQuartic":
        raise PreconditionError(
            f"sampling is implemented for quartic Dupin surfaces, got {verdict.kind}")
    cn = normalize_quartic(c)
    sd = spectral_data(cn, pol)
    label = classify_quartic(sd, pol)
    squares = ((sd.A3 - sd.A1) / 4, (sd.A2 - sd.A1) / 4, -(sd.A2 + sd.A3) / 4)

    frame = _exact_axis_frame(cn, sd) if exact_in else None
    exact = exact_in and frame is not None
    if frame is None:
        frame = _float_frame(cn, sd)
        squares = tuple(float(v) for v in squares)
    try:
        canon_pts = _canonical_points(squares, sd.Dsq, label, n, rng, exact)
    except IrrationalSpectrum:
        exact = False
        squares = tuple(float(v) for v in squares)
        canon_pts = _canonical_points(squares, float(sd.Dsq), label, n, rng, exact)
        frame = [tuple(float(v) for v in row) for row in frame]

    shift = tuple(-(v / c.a0) / 2 for v in c.b)  # cn(x) = (c/a0)(x + shift)
    out = []
    for X in canon_pts:
        # cn(x) = canonical(R x)  =>  x = R^T X; then undo the b shift
        x = tuple(sum(frame[r][i] * X[r] for r in range(3)) for i in range(3))
        pt = tuple(x[i] + shift[i] for i in range(3))
        if not exact:
            pt = tuple(float(v) for v in pt)
            if not _residual_ok(c, pt, False):
                pt = _newton_polish(c, pt)
        if _residual_ok(c, pt, exact):
            out.append(pt)
    if not out:
        raise NoRealPoints("no sample points survived the residual filter")
    return out
