"""Top-level decision procedure.

Dispatch by degree, then the complete-intersection case logic for quartics,
the rational-target equalities for cubics, and the rotational-quadric test.
A 12-generator oracle cross-checks every quartic case decision.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .core import (SIGMA12, SIGMA13, DarbouxCoefficients, apply_permutation,
                   normalize_quartic, weighted_rescale)
from .errors import (InternalCheckError, NotNormalized, PreconditionError,
                     ZeroCubicPart, ZeroInput)
from .invariants import (base_invariants, cubic_forms, k_form, l_form, m_form,
                         quadric_forms, quartic_generators, reduced_generators_e0)
from .scalar import EXACT, Scalar

DUPIN_QUARTIC = "DupinQuartic"
DUPIN_CUBIC = "DupinCubic"
DUPIN_QUADRIC = "DupinQuadric"
NOT_DUPIN = "NotDupin"
DEGENERATE = "DegenerateInput"


@dataclass(frozen=True)
class TolerancePolicy:
    """Zero-test authority.

    Exact mode: zero means literal zero.  Float mode: a quantity of weighted
    degree w is zero iff |value| <= tau_rel after the input has been
    weighted-rescaled to unit weighted sup-norm; the recognizer performs that
    rescale, so the test here reduces to a plain comparison with tau_rel.
    """

    mode: str = EXACT
    tau_rel: float = 1e-9

    @property
    def exact(self) -> bool:
        return self.mode == EXACT

    def is_zero(self, value: Scalar) -> bool:
        if self.exact:
            return value == 0
        return abs(value) <= self.tau_rel

    def nonzero(self, value: Scalar) -> bool:
        return not self.is_zero(value)

    def eq(self, a: Scalar, b: Scalar) -> bool:
        return self.is_zero(a - b)


@dataclass
class Verdict:
    kind: str
    case_label: Optional[str] = None
    witness: Optional[Tuple[str, Scalar]] = None
    residuals: Dict[str, Scalar] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def is_dupin(self) -> bool:
        return self.kind in (DUPIN_QUARTIC, DUPIN_CUBIC, DUPIN_QUADRIC)


def weighted_sup_norm(c: DarbouxCoefficients) -> float:
    """max(|b_i|, |c_i|^1/2, |d_i|^1/2, |e_i|^1/3, |f0|^1/4); a0 has weight 0."""
    mags = [abs(float(v)) for v in c.b]
    mags += [abs(float(v)) ** 0.5 for v in (*c.c, *c.d)]
    mags += [abs(float(v)) ** (1.0 / 3.0) for v in c.e]
    mags.append(abs(float(c.f0)) ** 0.25)
    return max(mags)


def _float_gauge(c: DarbouxCoefficients) -> DarbouxCoefficients:
    s = weighted_sup_norm(c)
    if s == 0:
        return c
    return weighted_rescale(c, 1.0 / s)


def _plain_zero(pol: TolerancePolicy, value, scale) -> bool:
    if pol.exact:
        return value == 0
    return abs(value) <= pol.tau_rel * scale


def recognize(c: DarbouxCoefficients, pol: TolerancePolicy,
              cross_check: bool = True) -> Verdict:
    """Dispatch: quartic / cubic / quadric / degenerate, then decide."""
    vals = c.astuple()
    if all(v == 0 for v in vals):
        raise ZeroInput("all fourteen coefficients vanish")
    sup = max(abs(float(v)) for v in vals)
    if not _plain_zero(pol, c.a0, sup):
        cn = normalize_quartic(c)
        if not pol.exact and _is_zero_point(cn, c, pol):
            # everything cancelled to rounding noise at the input's own
            # scale: the surface is the double point rho^4 = 0 within
            # tolerance, and gauging the leftovers up would amplify noise
            return Verdict(kind=DUPIN_QUARTIC, case_label="d",
                           residuals={"W1+4f0": 0.0, "W2-C0W1": 0.0},
                           notes=["zero point within tolerance"])
        return recognize_quartic_cases(cn, pol, cross_check=cross_check)
    if not all(_plain_zero(pol, v, sup) for v in c.b):
        return recognize_cubic(c, pol)
    if not all(_plain_zero(pol, v, sup) for v in (*c.c, *c.d)):
        return recognize_quadric(c, pol)
    return Verdict(kind=DEGENERATE, case_label="none",
                   notes=["degree <= 1: plane, point or empty; out of scope"])


def _is_zero_point(cn: DarbouxCoefficients, original: DarbouxCoefficients,
                   pol: TolerancePolicy) -> bool:
    """Every normalized coefficient below tolerance at the weighted scale of
    the a0-divided input (b included, weight 1)."""
    a0 = float(original.a0)
    divided = DarbouxCoefficients(*[float(v) / a0 for v in original.astuple()])
    s = max(weighted_sup_norm(divided), 1.0)
    tau = pol.tau_rel
    return (all(abs(float(v)) <= tau * s * s for v in (*cn.c, *cn.d))
            and all(abs(float(v)) <= tau * s ** 3 for v in cn.e)
            and abs(float(cn.f0)) <= tau * s ** 4)


def _first_witness(residuals: Dict[str, Scalar], pol: TolerancePolicy):
    for name, value in residuals.items():
        if pol.nonzero(value):
            return (name, value)
    return None


def _require_normalized(c: DarbouxCoefficients):
    if c.a0 != 1 or any(v != 0 for v in c.b):
        raise NotNormalized("requires the form a0 = 1, b = 0 (run normalize_quartic)")


def recognize_quartic_cases(c: DarbouxCoefficients, pol: TolerancePolicy,
                            cross_check: bool = True) -> Verdict:
    """First applicable case of the complete-intersection stratification.

    (a) e1 != 0: K2, K3, L1, M1.   (b) e2 != 0: K1, K3, L2, M2.
    (c) e3 != 0: K1, K2, L3, M3.   (d)-(f): the e = 0 strata.
    Float-mode axis guards that barely fire fall through to (d)-(f) as well,
    so there is no cliff at the e = 0 boundary.
    """
    _require_normalized(c)
    work = c if pol.exact else _float_gauge(c)
    verdict = _quartic_case_verdict(work, pol)
    # dispatch == oracle is a theorem of the exact ideal; float noise shifts
    # the two test families differently near the variety, so the automatic
    # self-check runs in exact mode only
    if cross_check and pol.exact:
        oracle = recognize_quartic_oracle(c, pol)
        if oracle.is_dupin != verdict.is_dupin:
            raise InternalCheckError(
                f"case dispatch says {verdict.kind} but 12-generator oracle says "
                f"{oracle.kind} (case {verdict.case_label}, witness {verdict.witness})")
    return verdict


def _axis_case_residuals(c: DarbouxCoefficients, label: str) -> Dict[str, Scalar]:
    s12 = apply_permutation(c, SIGMA12)
    s13 = apply_permutation(c, SIGMA13)
    if label == "a":
        return {"K2": k_form(s12), "K3": k_form(s13), "L1": l_form(c), "M1": m_form(c)}
    if label == "b":
        return {"K1": k_form(c), "K3": k_form(s13), "L2": l_form(s12), "M2": m_form(s12)}
    return {"K1": k_form(c), "K2": k_form(s12), "L3": l_form(s13), "M3": m_form(s13)}


def _quartic_case_verdict(c: DarbouxCoefficients, pol: TolerancePolicy) -> Verdict:
    guards = (("a", c.e1), ("b", c.e2), ("c", c.e3))
    for label, guard in guards:
        if not pol.nonzero(guard):
            continue
        res = _axis_case_residuals(c, label)
        witness = _first_witness(res, pol)
        if witness is None:
            return Verdict(kind=DUPIN_QUARTIC, case_label=label, residuals=res)
        if pol.exact or not _near_e_zero(c, pol):
            return Verdict(kind=NOT_DUPIN, case_label=label, witness=witness,
                           residuals=res)
        break  # borderline float guard: give the e = 0 strata a chance too

    ce = c if pol.exact else c.replace(e1=0.0, e2=0.0, e3=0.0)
    inv = base_invariants(ce)
    d_res = {"W1+4f0": inv.W1 + 4 * ce.f0, "W2-C0W1": inv.W2 - inv.C0 * inv.W1}
    if all(pol.is_zero(v) for v in d_res.values()):
        return Verdict(kind=DUPIN_QUARTIC, case_label="d", residuals=d_res)
    if pol.nonzero(inv.C0):
        y0, y1, _, _ = reduced_generators_e0(ce)
        res = {"Y0": y0, "Y1": y1}
        witness = _first_witness(res, pol)
        if witness is None:
            return Verdict(kind=DUPIN_QUARTIC, case_label="e", residuals=res)
        return Verdict(kind=NOT_DUPIN, case_label="e", witness=witness, residuals=res)
    res = {"W1+3f0": inv.W1 + 3 * ce.f0,
           "(W2-C0W1)^2-4f0^3": (inv.W2 - inv.C0 * inv.W1) ** 2 - 4 * ce.f0 ** 3}
    witness = _first_witness(res, pol)
    if witness is None:
        return Verdict(kind=DUPIN_QUARTIC, case_label="f", residuals=res)
    return Verdict(kind=NOT_DUPIN, case_label="f", witness=witness, residuals=res)


def _near_e_zero(c: DarbouxCoefficients, pol: TolerancePolicy) -> bool:
    """True when every e_i is within 10^3*tau of zero: the axis guard is then
    borderline and the e = 0 strata are tried as a second route."""
    return all(abs(float(v)) <= 1e3 * pol.tau_rel for v in c.e)


def recognize_quartic_oracle(c: DarbouxCoefficients, pol: TolerancePolicy) -> Verdict:
    """Dupin iff all 12 ideal generators vanish under the policy."""
    _require_normalized(c)
    work = c if pol.exact else _float_gauge(c)
    gens = quartic_generators(work).as_dict()
    witness = _first_witness(gens, pol)
    if witness is None:
        return Verdict(kind=DUPIN_QUARTIC, case_label="none", residuals=gens)
    return Verdict(kind=NOT_DUPIN, case_label="none", witness=witness, residuals=gens)


def recognize_cubic(c: DarbouxCoefficients, pol: TolerancePolicy) -> Verdict:
    """Dupin iff 4e_i = E_i for i = 1..3 and f0 equals its rational target;
    compared after clearing the B0 powers."""
    if not pol.is_zero(c.a0):
        raise PreconditionError("cubic recognition requires a0 = 0")
    work = c.replace(a0=0 * c.a0)
    if not pol.exact:
        gauge = max(abs(float(v)) for v in c.b)
        if gauge == 0:
            raise ZeroCubicPart("B0 = 0: no cubic part")
        work = _float_gauge(DarbouxCoefficients(*[float(v) / gauge for v in work.astuple()]))
    b0 = base_invariants(work).B0
    if b0 == 0:
        raise ZeroCubicPart("B0 = 0: no cubic part")
    targets = cubic_forms(work)
    names = ("4e1*B0^3-P1", "4e2*B0^3-P2", "4e3*B0^3-P3", "4f0*B0^4-Q")
    res = dict(zip(names, targets.residuals))
    # cleared equalities, compared at the scale of their own clearing factor:
    # |lhs - rhs| <= tau * max(4 B0^k, |lhs|, |rhs|) is the relative test of
    # the uncleared equality, evaluated without a division
    floors = (4 * b0 ** 3,) * 3 + (4 * b0 ** 4,)
    witness = None
    for name, (lhs, rhs), floor in zip(names, targets.cleared_pairs, floors):
        scale = 1 if pol.exact else max(abs(floor), abs(lhs), abs(rhs))
        if pol.nonzero((lhs - rhs) / scale):
            witness = (name, lhs - rhs)
            break
    if witness is None:
        return Verdict(kind=DUPIN_CUBIC, case_label="none", residuals=res)
    return Verdict(kind=NOT_DUPIN, case_label="none", witness=witness, residuals=res)


def recognize_quadric(c: DarbouxCoefficients, pol: TolerancePolicy) -> Verdict:
    """Dupin-as-quadric iff the quadratic part is rotational (seven forms
    vanish) and the extended matrix is singular (det Phat = 0).

    The two bits are reported separately in the notes: a smooth rotational
    quadric fails only the singularity condition.
    """
    if any(v != 0 for v in (c.a0, *c.b)) and pol.exact:
        raise PreconditionError("quadric recognition requires a0 = 0 and b = 0")
    work = c
    if not pol.exact:
        gauge = max(abs(float(v)) for v in (*c.c, *c.d))
        if gauge == 0:
            raise PreconditionError("no quadratic part")
        scaled = [float(v) / gauge for v in c.astuple()]
        work = _float_gauge(DarbouxCoefficients(*scaled))
        work = work.replace(a0=0.0, b1=0.0, b2=0.0, b3=0.0)
    if all(v == 0 for v in (*work.c, *work.d)):
        raise PreconditionError("no quadratic part")
    forms = quadric_forms(work)
    res = {"S0": forms.S0, "S1": forms.S1, "S12": forms.S12, "S13": forms.S13,
           "T1": forms.T1, "T12": forms.T12, "T13": forms.T13,
           "detPhat": forms.det_phat}
    st = {k: v for k, v in res.items() if k != "detPhat"}
    rotational = all(pol.is_zero(v) for v in st.values())
    singular = pol.is_zero(forms.det_phat)
    if rotational and singular:
        return Verdict(kind=DUPIN_QUADRIC, case_label="none", residuals=res,
                       notes=["rotational", "singular"])
    if rotational:
        return Verdict(kind=NOT_DUPIN, case_label="none",
                       witness=("detPhat", forms.det_phat), residuals=res,
                       notes=["smooth rotational quadric"])
    return Verdict(kind=NOT_DUPIN, case_label="none", witness=_first_witness(st, pol),
                   residuals=res,
                   notes=["singular" if singular else "nonsingular", "not rotational"])
