"""Coefficient data model, trivariate polynomial carrier, Euclidean motions.

The fourteen homogeneous coefficients (a0, b1..b3, c1..c3, d1..d3, e1..e3, f0)
name the implicit surface

    a0*(x^2+y^2+z^2)^2 + 2*(b1*x+b2*y+b3*z)*(x^2+y^2+z^2)
      + c1*x^2 + c2*y^2 + c3*z^2 + 2*d1*y*z + 2*d2*x*z + 2*d3*x*y
      + 2*e1*x + 2*e2*y + 2*e3*z + f0  =  0.

Motions act on coefficients through full polynomial substitution (the sparse
TriPoly is the single source of truth); closed-form per-coefficient updates
exist only as cross-checks in the test suite.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from .errors import NotQuartic, ShapeError, ZeroScale
from .scalar import Scalar

COEFF_FIELDS = ("a0", "b1", "b2", "b3", "c1", "c2", "c3",
                "d1", "d2", "d3", "e1", "e2", "e3", "f0")

# index permutations sigma_ij swap the indicated subscript in b, c, d, e
SIGMA12 = "s12"
SIGMA13 = "s13"
SIGMA23 = "s23"
_PERMS = {SIGMA12: (1, 0, 2), SIGMA13: (2, 1, 0), SIGMA23: (0, 2, 1)}


@dataclass(frozen=True)
class DarbouxCoefficients:
    a0: Scalar
    b1: Scalar
    b2: Scalar
    b3: Scalar
    c1: Scalar
    c2: Scalar
    c3: Scalar
    d1: Scalar
    d2: Scalar
    d3: Scalar
    e1: Scalar
    e2: Scalar
    e3: Scalar
    f0: Scalar

    @classmethod
    def make(cls, a0=0, b=(0, 0, 0), c=(0, 0, 0), d=(0, 0, 0), e=(0, 0, 0), f0=0,
             exact: bool = True) -> "DarbouxCoefficients":
        conv = (lambda v: Fraction(v)) if exact else float
        vals = [a0, *b, *c, *d, *e, f0]
        return cls(*[conv(v) for v in vals])

    def astuple(self) -> Tuple[Scalar, ...]:
        return tuple(getattr(self, f) for f in COEFF_FIELDS)

    @property
    def b(self):
        return (self.b1, self.b2, self.b3)

    @property
    def c(self):
        return (self.c1, self.c2, self.c3)

    @property
    def d(self):
        return (self.d1, self.d2, self.d3)

    @property
    def e(self):
        return (self.e1, self.e2, self.e3)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.astuple())

    def is_exact(self) -> bool:
        return all(isinstance(v, (Fraction, int)) for v in self.astuple())

    def replace(self, **kw) -> "DarbouxCoefficients":
        vals = {f: getattr(self, f) for f in COEFF_FIELDS}
        vals.update(kw)
        return DarbouxCoefficients(**vals)

    def scale(self, lam: Scalar) -> "DarbouxCoefficients":
        """Projective rescale: all fourteen entries times lam (same surface)."""
        return DarbouxCoefficients(*[v * lam for v in self.astuple()])

    def to_float(self) -> "DarbouxCoefficients":
        return DarbouxCoefficients(*[float(v) for v in self.astuple()])


Monomial = Tuple[int, int, int]


class TriPoly:
    """Sparse trivariate polynomial of total degree <= 4.

    Zero coefficients are never stored.  Supports exactly the arithmetic the
    motion machinery needs: add, multiply, scale, affine substitution, point
    evaluation.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Monomial, Scalar] | None = None):
        self.terms: Dict[Monomial, Scalar] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff != 0:
                    if sum(mono) > 4:
                        raise ShapeError(f"monomial {mono} exceeds total degree 4")
                    self.terms[mono] = coeff

    @classmethod
    def constant(cls, v: Scalar) -> "TriPoly":
        return cls({(0, 0, 0): v})

    def __eq__(self, other):
        return isinstance(other, TriPoly) and self.terms == other.terms

    def __add__(self, other: "TriPoly") -> "TriPoly":
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            s = out.get(mono, 0) + coeff
            if s == 0:
                out.pop(mono, None)
            else:
                out[mono] = s
        res = TriPoly()
        res.terms = out
        return res

    def __mul__(self, other: "TriPoly") -> "TriPoly":
        out: Dict[Monomial, Scalar] = {}
        for (i1, j1, k1), v1 in self.terms.items():
            for (i2, j2, k2), v2 in other.terms.items():
                mono = (i1 + i2, j1 + j2, k1 + k2)
                if sum(mono) > 4:
                    raise ShapeError("product exceeds total degree 4")
                s = out.get(mono, 0) + v1 * v2
                if s == 0:
                    out.pop(mono, None)
                else:
                    out[mono] = s
        res = TriPoly()
        res.terms = out
        return res

    def scaled(self, lam: Scalar) -> "TriPoly":
        if lam == 0:
            return TriPoly()
        res = TriPoly()
        res.terms = {m: v * lam for m, v in self.terms.items()}
        return res

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def coeff(self, i: int, j: int, k: int) -> Scalar:
        return self.terms.get((i, j, k), 0)

    def evaluate(self, point) -> Scalar:
        x, y, z = point
        total = 0
        for (i, j, k), v in self.terms.items():
            total += v * x**i * y**j * z**k
        return total

    def substitute_affine(self, rows, translation) -> "TriPoly":
        """Substitute (x,y,z) -> (rows[0].(x,y,z)+t0, rows[1]..., rows[2]...).

        rows is the 3x3 matrix applied to the variable vector; translation the
        added constant.  Exact when all inputs are rational.
        """
        lin = []
        for r in range(3):
            t: Dict[Monomial, Scalar] = {}
            coeffs = (rows[r][0], rows[r][1], rows[r][2])
            for axis, cval in enumerate(coeffs):
                if cval != 0:
                    mono = tuple(1 if a == axis else 0 for a in range(3))
                    t[mono] = cval
            if translation[r] != 0:
                t[(0, 0, 0)] = translation[r]
            p = TriPoly()
            p.terms = t
            lin.append(p)
        maxdeg = self.degree()
        powers = []
        for p in lin:
            pw = [TriPoly.constant(1), p]
            for _ in range(2, maxdeg + 1):
                pw.append(pw[-1] * p)
            powers.append(pw)
        out = TriPoly()
        for (i, j, k), v in self.terms.items():
            term = powers[0][i] * powers[1][j] * powers[2][k]
            out = out + term.scaled(v)
        return out


@dataclass(frozen=True)
class EuclideanMotion:
    """Rigid (or improper-orthogonal) motion: x -> R x + t."""

    rotation: Tuple[Tuple[Scalar, ...], ...]
    translation: Tuple[Scalar, ...]

    @classmethod
    def identity(cls) -> "EuclideanMotion":
        one, zero = Fraction(1), Fraction(0)
        return cls(((one, zero, zero), (zero, one, zero), (zero, zero, one)),
                   (zero, zero, zero))

    @classmethod
    def translation_by(cls, t) -> "EuclideanMotion":
        m = cls.identity()
        return cls(m.rotation, tuple(t))

    @classmethod
    def rotation_by(cls, rows) -> "EuclideanMotion":
        return cls(tuple(tuple(r) for r in rows), (Fraction(0),) * 3)

    def apply_point(self, p):
        R, t = self.rotation, self.translation
        return tuple(sum(R[i][j] * p[j] for j in range(3)) + t[i] for i in range(3))

    def after(self, other: "EuclideanMotion") -> "EuclideanMotion":
        """Motion x -> self(other(x))."""
        R1, t1 = self.rotation, self.translation
        R2, t2 = other.rotation, other.translation
        R = tuple(tuple(sum(R1[i][k] * R2[k][j] for k in range(3)) for j in range(3))
                  for i in range(3))
        t = tuple(sum(R1[i][k] * t2[k] for k in range(3)) + t1[i] for i in range(3))
        return EuclideanMotion(R, t)

    def inverse(self) -> "EuclideanMotion":
        """Inverse assuming orthogonal rotation part (R^T, -R^T t)."""
        R, t = self.rotation, self.translation
        Rt = tuple(tuple(R[j][i] for j in range(3)) for i in range(3))
        ti = tuple(-sum(Rt[i][k] * t[k] for k in range(3)) for i in range(3))
        return EuclideanMotion(Rt, ti)

    def orthogonality_defect(self) -> Scalar:
        """max |(R^T R - I)_ij|; exactly 0 for exact rotations."""
        R = self.rotation
        worst = 0
        for i in range(3):
            for j in range(3):
                s = sum(R[k][i] * R[k][j] for k in range(3))
                target = 1 if i == j else 0
                worst = max(worst, abs(s - target))
        return worst


def polynomial_from_coefficients(c: DarbouxCoefficients) -> TriPoly:
    """Expand the implicit equation term by term into a sparse polynomial."""
    one = Fraction(1) if c.is_exact() else 1.0
    rho2 = TriPoly({(2, 0, 0): one, (0, 2, 0): one, (0, 0, 2): one})
    p = (rho2 * rho2).scaled(c.a0)
    blin = TriPoly({(1, 0, 0): 2 * c.b1, (0, 1, 0): 2 * c.b2, (0, 0, 1): 2 * c.b3})
    p = p + blin * rho2
    p = p + TriPoly({
        (2, 0, 0): c.c1, (0, 2, 0): c.c2, (0, 0, 2): c.c3,
        (0, 1, 1): 2 * c.d1, (1, 0, 1): 2 * c.d2, (1, 1, 0): 2 * c.d3,
        (1, 0, 0): 2 * c.e1, (0, 1, 0): 2 * c.e2, (0, 0, 1): 2 * c.e3,
        (0, 0, 0): c.f0,
    })
    return p


# monomials whose coefficient must equal a stated multiple of a named entry;
# everything not listed must vanish
_SHAPE = {
    "a0": [((4, 0, 0), 1), ((0, 4, 0), 1), ((0, 0, 4), 1),
           ((2, 2, 0), 2), ((2, 0, 2), 2), ((0, 2, 2), 2)],
    "b1": [((3, 0, 0), 2), ((1, 2, 0), 2), ((1, 0, 2), 2)],
    "b2": [((0, 3, 0), 2), ((2, 1, 0), 2), ((0, 1, 2), 2)],
    "b3": [((0, 0, 3), 2), ((2, 0, 1), 2), ((0, 2, 1), 2)],
    "c1": [((2, 0, 0), 1)], "c2": [((0, 2, 0), 1)], "c3": [((0, 0, 2), 1)],
    "d1": [((0, 1, 1), 2)], "d2": [((1, 0, 1), 2)], "d3": [((1, 1, 0), 2)],
    "e1": [((1, 0, 0), 2)], "e2": [((0, 1, 0), 2)], "e3": [((0, 0, 1), 2)],
    "f0": [((0, 0, 0), 1)],
}
_KNOWN_MONOS = {m for spots in _SHAPE.values() for m, _ in spots}


def coefficients_from_polynomial(p: TriPoly) -> DarbouxCoefficients:
    """Exact left-inverse of polynomial_from_coefficients.

    Raises ShapeError when repeated monomials disagree (e.g. coeff(x^4) !=
    coeff(y^4)) or a monomial outside the Darboux shape appears: the input is
    then not a Darboux cyclide at all.
    """
    for mono in p.terms:
        if mono not in _KNOWN_MONOS:
            raise ShapeError(f"monomial {mono} not allowed in Darboux form")
    exact = all(isinstance(v, (Fraction, int)) for v in p.terms.values())

    def scalar(mono):
        v = p.terms.get(mono, 0)
        return Fraction(v) if exact else float(v)

    values = {}
    for name, spots in _SHAPE.items():
        candidates = [scalar(m) / mult for m, mult in spots]
        first = candidates[0]
        for got, (m, _) in zip(candidates[1:], spots[1:]):
            if got != first:
                raise ShapeError(
                    f"inconsistent {name}: monomial {m} gives {got}, expected {first}")
        values[name] = first
    return DarbouxCoefficients(**values)


def apply_motion(c: DarbouxCoefficients, m: EuclideanMotion) -> DarbouxCoefficients:
    """Coefficients of the surface polynomial precomposed with the motion.

    Requires an orthogonal rotation part; the Darboux shape is then preserved
    and re-extraction cannot fail.
    """
    p = polynomial_from_coefficients(c)
    q = p.substitute_affine(m.rotation, m.translation)
    try:
        return coefficients_from_polynomial(q)
    except ShapeError as exc:  # only reachable with a non-orthogonal matrix
        raise ShapeError(f"motion did not preserve Darboux shape: {exc}") from exc


def apply_permutation(c: DarbouxCoefficients, which: str) -> DarbouxCoefficients:
    """Swap one index pair simultaneously in b, c, d, e (a0, f0 fixed)."""
    perm = _PERMS[which]
    pick = lambda v: tuple(v[i] for i in perm)
    b, cc, d, e = pick(c.b), pick(c.c), pick(c.d), pick(c.e)
    return DarbouxCoefficients(c.a0, *b, *cc, *d, *e, c.f0)


def weighted_rescale(c: DarbouxCoefficients, lam: Scalar) -> DarbouxCoefficients:
    """Coefficient action of (x,y,z) -> (lam*x, lam*y, lam*z) followed by
    dividing the polynomial by lam^4: b*lam, c,d*lam^2, e*lam^3, f0*lam^4."""
    if lam == 0:
        raise ZeroScale("weighted rescale requires lambda != 0")
    l2 = lam * lam
    l3 = l2 * lam
    l4 = l2 * l2
    return DarbouxCoefficients(
        c.a0,
        c.b1 * lam, c.b2 * lam, c.b3 * lam,
        c.c1 * l2, c.c2 * l2, c.c3 * l2,
        c.d1 * l2, c.d2 * l2, c.d3 * l2,
        c.e1 * l3, c.e2 * l3, c.e3 * l3,
        c.f0 * l4)


def normalize_quartic(c: DarbouxCoefficients) -> DarbouxCoefficients:
    """Divide by a0, then shift (x,y,z) -> (x - b1/2, y - b2/2, z - b3/2).

    Result has a0 = 1 and b = 0 exactly (tiny float cancellation residue in
    the b slots is zeroed after an internal sanity bound).
    """
    if c.a0 == 0:
        raise NotQuartic("a0 = 0: not a quartic")
    scaled = DarbouxCoefficients(*[v / c.a0 for v in c.astuple()])
    if all(v == 0 for v in scaled.b):
        return scaled
    shift = tuple(-v / 2 for v in scaled.b)
    moved = apply_motion(scaled, EuclideanMotion.translation_by(shift))
    if moved.is_exact():
        assert all(v == 0 for v in moved.b)
        return moved
    scale = max(abs(v) for v in c.astuple())
    assert all(abs(v) <= 1e-9 * max(scale, 1.0) for v in moved.b)
    return moved.replace(b1=0.0, b2=0.0, b3=0.0)
