"""Every named coefficient polynomial: the symmetric abbreviations, the 12
quartic ideal generators, the e=0 reduction, the cubic rational targets, and
the rotational-quadric forms."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .core import DarbouxCoefficients
from .errors import NotNormalized, PreconditionError, ZeroCubicPart
from .scalar import Scalar


@dataclass(frozen=True)
class InvariantBundle:
    """Symmetric abbreviations; invariant under all index permutations."""

    B0: Scalar
    C0: Scalar
    E0: Scalar
    W1: Scalar
    W2: Scalar
    W3: Scalar
    W4: Scalar


def base_invariants(c: DarbouxCoefficients) -> InvariantBundle:
    b1, b2, b3 = c.b
    c1, c2, c3 = c.c
    d1, d2, d3 = c.d
    e1, e2, e3 = c.e
    return InvariantBundle(
        B0=b1 * b1 + b2 * b2 + b3 * b3,
        C0=c1 + c2 + c3,
        E0=e1 * e1 + e2 * e2 + e3 * e3,
        W1=c1 * c2 + c1 * c3 + c2 * c3 - d1 * d1 - d2 * d2 - d3 * d3,
        W2=c1 * c2 * c3 + 2 * d1 * d2 * d3 - c1 * d1 * d1 - c2 * d2 * d2 - c3 * d3 * d3,
        W3=b1 * b1 * c1 + b2 * b2 * c2 + b3 * b3 * c3
           + 2 * b2 * b3 * d1 + 2 * b1 * b3 * d2 + 2 * b1 * b2 * d3,
        W4=c1 * e1 * e1 + c2 * e2 * e2 + c3 * e3 * e3
           + 2 * d1 * e2 * e3 + 2 * d2 * e1 * e3 + 2 * d3 * e1 * e2,
    )


def k_form(c: DarbouxCoefficients) -> Scalar:
    """K1 = (c3-c2)e2e3 + d1(e2^2-e3^2) + (d2e2-d3e3)e1."""
    c1, c2, c3 = c.c
    d1, d2, d3 = c.d
    e1, e2, e3 = c.e
    return (c3 - c2) * e2 * e3 + d1 * (e2 * e2 - e3 * e3) + (d2 * e2 - d3 * e3) * e1


def l_form(c: DarbouxCoefficients, inv: InvariantBundle | None = None) -> Scalar:
    """L1; the leading bracket uses the symmetric W1 + 4 f0."""
    if inv is None:
        inv = base_invariants(c)
    c1, c2, c3 = c.c
    d1, d2, d3 = c.d
    e1, e2, e3 = c.e
    w14 = inv.W1 + 4 * c.f0
    return ((w14 - (c2 + c3) ** 2 - d2 * d2 - d3 * d3) * e1
            + (inv.C0 * d3 + c3 * d3 - d1 * d2) * e2
            + (inv.C0 * d2 + c2 * d2 - d1 * d3) * e3)


def m_form(c: DarbouxCoefficients, inv: InvariantBundle | None = None) -> Scalar:
    """M1 = 2(c1e1+d3e2+d2e3)(W1+4f0) + e1(W2 - C0 W1 - 4 E0)."""
    if inv is None:
        inv = base_invariants(c)
    c1 = c.c1
    d2, d3 = c.d2, c.d3
    e1, e2, e3 = c.e
    return (2 * (c1 * e1 + d3 * e2 + d2 * e3) * (inv.W1 + 4 * c.f0)
            + e1 * (inv.W2 - inv.C0 * inv.W1 - 4 * inv.E0))


@dataclass(frozen=True)
class GeneratorValues:
    """Values of the 12 generators of the translation-normalized quartic ideal.

    All twelve vanish exactly when the surface is a Dupin cyclide."""

    K1: Scalar
    K2: Scalar
    K3: Scalar
    L1: Scalar
    L2: Scalar
    L3: Scalar
    M1: Scalar
    M2: Scalar
    M3: Scalar
    N1: Scalar
    N2: Scalar
    N3: Scalar

    def as_dict(self) -> Dict[str, Scalar]:
        return {k: getattr(self, k) for k in
                ("K1", "K2", "K3", "L1", "L2", "L3", "M1", "M2", "M3", "N1", "N2", "N3")}

    def all_zero(self) -> bool:
        return all(v == 0 for v in self.as_dict().values())


# weighted degrees under wd(b)=1, wd(c)=wd(d)=2, wd(e)=3, wd(f0)=4
GENERATOR_WEIGHTS = {"K1": 8, "K2": 8, "K3": 8, "L1": 7, "L2": 7, "L3": 7,
                     "M1": 9, "M2": 9, "M3": 9, "N1": 8, "N2": 10, "N3": 12}


def _require_normalized(c: DarbouxCoefficients):
    if c.a0 != 1 or any(v != 0 for v in c.b):
        raise NotNormalized("requires a0 = 1 and b = 0 (run normalize_quartic)")


def quartic_generators(c: DarbouxCoefficients) -> GeneratorValues:
    from .core import SIGMA12, SIGMA13, apply_permutation
    _require_normalized(c)
    inv = base_invariants(c)
    s12 = apply_permutation(c, SIGMA12)
    s13 = apply_permutation(c, SIGMA13)
    w14 = inv.W1 + 4 * c.f0
    n1 = ((4 * inv.W1 + 12 * c.f0 - 3 * inv.C0 ** 2) * w14
          - 2 * inv.C0 * (inv.W2 - inv.C0 * inv.W1 - 6 * inv.E0) - 4 * inv.W4)
    big = inv.W2 + inv.C0 * inv.W1 + 8 * inv.C0 * c.f0 - 4 * inv.E0
    n2 = 4 * (inv.W2 - inv.C0 * inv.W1 - 2 * inv.E0) * w14 + (inv.C0 ** 2 - 4 * c.f0) * big
    n3 = big * big - 4 * w14 ** 3
    return GeneratorValues(
        K1=k_form(c), K2=k_form(s12), K3=k_form(s13),
        L1=l_form(c, inv), L2=l_form(s12), L3=l_form(s13),
        M1=m_form(c, inv), M2=m_form(s12), M3=m_form(s13),
        N1=n1, N2=n2, N3=n3)


def reduced_generators_e0(c: DarbouxCoefficients) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
    """(Y0, Y1, Y2, Y3) of the e = 0 reduction; precondition e1 = e2 = e3 = 0."""
    if any(v != 0 for v in c.e):
        raise PreconditionError("Y reduction requires e1 = e2 = e3 = 0")
    inv = base_invariants(c)
    C0, W1, W2, f0 = inv.C0, inv.W1, inv.W2, c.f0
    w14 = W1 + 4 * f0
    y0 = (4 * W1 + 12 * f0 - C0 ** 2) ** 2 - 16 * f0 * C0 ** 2
    y1 = (4 * W1 + 12 * f0 - 3 * C0 ** 2) * w14 - 2 * C0 * (W2 - C0 * W1)
    y2 = (W2 - C0 * W1) * (C0 ** 2 - 4 * W1 - 4 * f0) - 8 * W2 * w14
    y3 = (C0 * W1 + 9 * W2) ** 2 - 4 * W1 ** 3 - 4 * W2 * (C0 ** 3 + 27 * W2)
    return (y0, y1, y2, y3)


@dataclass(frozen=True)
class CubicTargets:
    """Rational targets that cut out Dupin cyclides among cubics.

    The surface is Dupin iff 4*e_i = E_i (i = 1,2,3) and f0 = f0_target.
    Values are exact fractions for rational input; numerators are the cleared
    forms over B0^3 (E) and 4*B0^4 (f0)."""

    E1: Scalar
    E2: Scalar
    E3: Scalar
    f0_target: Scalar
    # cleared residuals 4*e_i*B0^3 - P_i  and  4*f0*B0^4 - Q, used for the
    # division-free Dupin test (weighted degrees 9, 9, 9, 12)
    residuals: Tuple[Scalar, Scalar, Scalar, Scalar]
    # the two sides of each cleared equality, for relative float comparison
    cleared_pairs: Tuple[Tuple[Scalar, Scalar], ...] = ()


def _e_numerator(b, c, d, B0) -> Scalar:
    """B0^3 * E1 as a polynomial (division-free)."""
    b1, b2, b3 = b
    c1, c2, c3 = c
    d1, d2, d3 = d
    W3 = (b1 * b1 * c1 + b2 * b2 * c2 + b3 * b3 * c3
          + 2 * b2 * b3 * d1 + 2 * b1 * b3 * d2 + 2 * b1 * b2 * d3)
    return (-b1 * (W3 - B0 * (c2 + c3)) ** 2
            + 2 * b1 * b1 * B0 * (b3 * c3 * d2 + b2 * c2 * d3)
            - 4 * b1 * B0 * (b3 * d2 + b2 * d3) ** 2
            + 2 * B0 * (b3 * d2 + b2 * d3) * (b2 * b2 * c1 + b3 * b3 * c1 - 2 * b2 * b3 * d1)
            - 2 * b2 * b3 * B0 * (c2 - c3) * (b2 * d2 - b3 * d3)
            + b1 * B0 * B0 * ((c1 - c2) * (c1 - c3) - d1 * d1 + d2 * d2 + d3 * d3)
            + 2 * d1 * B0 * B0 * (b2 * d2 + b3 * d3))


def cubic_forms(c: DarbouxCoefficients) -> CubicTargets:
    """E1, sigma12 E1, sigma13 E1 and the f0 target, with denominators that
    are powers of B0 (exact over the rationals)."""
    if c.a0 != 0:
        raise PreconditionError("cubic forms require a0 = 0")
    inv = base_invariants(c)
    if inv.B0 == 0:
        raise ZeroCubicPart("B0 = 0: no cubic part")
    B0 = inv.B0

    def swapped(which):
        from .core import apply_permutation
        cc = apply_permutation(c, which)
        return cc.b, cc.c, cc.d

    from .core import SIGMA12, SIGMA13
    p1 = _e_numerator(c.b, c.c, c.d, B0)
    p2 = _e_numerator(*swapped(SIGMA12), B0)
    p3 = _e_numerator(*swapped(SIGMA13), B0)
    q = (inv.W3 * (inv.W3 - B0 * inv.C0) ** 2 + B0 * B0 * inv.W3 * inv.W1
         + B0 ** 3 * (inv.W2 - inv.C0 * inv.W1))
    B3 = B0 ** 3
    B4 = B3 * B0
    return CubicTargets(
        E1=p1 / B3, E2=p2 / B3, E3=p3 / B3,
        f0_target=q / (4 * B4),
        residuals=(4 * c.e1 * B3 - p1,
                   4 * c.e2 * B3 - p2,
                   4 * c.e3 * B3 - p3,
                   4 * c.f0 * B4 - q),
        cleared_pairs=((4 * c.e1 * B3, p1), (4 * c.e2 * B3, p2),
                       (4 * c.e3 * B3, p3), (4 * c.f0 * B4, q)))


@dataclass(frozen=True)
class QuadricForms:
    """Seven cubic forms cutting out rotational quadrics, plus det of the
    extended 4x4 symmetric matrix (singularity of the quadric)."""

    S0: Scalar
    S1: Scalar
    S12: Scalar
    S13: Scalar
    T1: Scalar
    T12: Scalar
    T13: Scalar
    det_phat: Scalar

    def rotational(self) -> bool:
        return all(v == 0 for v in
                   (self.S0, self.S1, self.S12, self.S13, self.T1, self.T12, self.T13))


def _s1(c1, c2, c3, d1, d2, d3):
    return (d1 * (d2 * d2 + d3 * d3 - 2 * d1 * d1)
            + (c2 + c3 - 2 * c1) * d2 * d3 + 2 * (c2 - c1) * (c3 - c1) * d1)


def _t1(c1, c2, c3, d1, d2, d3):
    return d1 * (d2 * d2 - d3 * d3) + (c2 - c3) * d2 * d3


def quadric_forms(c: DarbouxCoefficients) -> QuadricForms:
    if c.a0 != 0 or any(v != 0 for v in c.b):
        raise PreconditionError("quadric forms require a0 = 0 and b = 0")
    c1, c2, c3 = c.c
    d1, d2, d3 = c.d
    e1, e2, e3 = c.e
    f0 = c.f0
    s0 = ((c3 - c2) * d1 * d1 + (c1 - c3) * d2 * d2 + (c2 - c1) * d3 * d3
          + (c1 - c2) * (c1 - c3) * (c2 - c3))
    # 4x4 determinant of [[c1,d3,d2,e1],[d3,c2,d1,e2],[d2,d1,c3,e3],[e1,e2,e3,f0]]
    m = ((c1, d3, d2, e1), (d3, c2, d1, e2), (d2, d1, c3, e3), (e1, e2, e3, f0))
    det = _det4(m)
    return QuadricForms(
        S0=s0,
        S1=_s1(c1, c2, c3, d1, d2, d3),
        S12=_s1(c2, c1, c3, d2, d1, d3),
        S13=_s1(c3, c2, c1, d3, d2, d1),
        T1=_t1(c1, c2, c3, d1, d2, d3),
        T12=_t1(c2, c1, c3, d2, d1, d3),
        T13=_t1(c3, c2, c1, d3, d2, d1),
        det_phat=det)


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def _det4(m):
    total = 0
    sign = 1
    for col in range(4):
        minor = [[m[r][cc] for cc in range(4) if cc != col] for r in range(1, 4)]
        total = total + sign * m[0][col] * _det3(minor)
        sign = -sign
    return total
