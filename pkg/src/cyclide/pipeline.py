"""End-to-end analysis used by the CLI verbs and the batch front end."""
from __future__ import annotations

from . import moebius
from .canonical import (canonical_cubic_params, canonical_quartic_params,
                        spectral_data)
from .classify import (classify_cubic, classify_quartic_report, j0_cubic,
                       j0_quartic, willmore_energy)
from .core import DarbouxCoefficients, normalize_quartic
from .errors import CyclideError
from .recognizer import (DUPIN_CUBIC, DUPIN_QUADRIC, DUPIN_QUARTIC,
                         TolerancePolicy, recognize)
from .serialize import scalar_json, verdict_to_json


def analyze(c: DarbouxCoefficients, pol: TolerancePolicy,
            want: str = "classify") -> dict:
    """One input -> one report dict.  `want` is the CLI verb: recognize,
    classify, canonicalize, j0 or to-torus; later stages subsume earlier
    ones and degrade gracefully (a NotDupin input only gets a verdict)."""
    verdict = recognize(c, pol)
    report = verdict_to_json(verdict)
    if want == "recognize" or not verdict.is_dupin:
        return report

    if verdict.kind == DUPIN_QUARTIC:
        cn = normalize_quartic(c)
        sd = spectral_data(cn, pol)
        report["spectral"] = {"A1": scalar_json(sd.A1), "A2": scalar_json(sd.A2),
                              "A3": scalar_json(sd.A3), "Dsq": scalar_json(sd.Dsq),
                              "F": scalar_json(sd.F)}
        label, ambiguous = classify_quartic_report(sd, pol)
        report["class"] = label.code
        if ambiguous:
            report["class_ambiguous"] = True
        j0 = j0_quartic(cn, sd, pol)
        report["J0"] = scalar_json(j0.value) if j0.kind == "finite" else j0.kind
        report["willmore"] = willmore_energy(j0)
        if want in ("canonicalize", "to-torus"):
            params = canonical_quartic_params(sd)
            report["canonical"] = {
                "alpha_sq": scalar_json(params.alpha_sq),
                "gamma_sq": scalar_json(params.gamma_sq),
                "delta_sq": scalar_json(params.delta_sq),
                "agd": scalar_json(params.agd)}
            if want == "to-torus":
                try:
                    spec = moebius.torus_radii(params)
                    report["torus"] = {"r_sq": scalar_json(spec.r_sq),
                                       "R_sq": scalar_json(spec.R_sq)}
                except CyclideError as exc:
                    report["torus"] = {"error": str(exc)}
                try:
                    variant = moebius.MOBT if float(params.gamma_sq) > 0 else moebius.MOBT2
                    report["map"] = moebius.build_map(params, variant).to_json()
                except CyclideError as exc:
                    report["map"] = {"error": str(exc)}
        return report

    if verdict.kind == DUPIN_CUBIC:
        params = canonical_cubic_params(c, pol)
        label = classify_cubic(params.p, params.q, pol)
        report["class"] = label.code
        report["canonical"] = {"p": scalar_json(params.p), "q": scalar_json(params.q),
                               "shift": [scalar_json(v) for v in params.shift]}
        j0 = j0_cubic(c, pol)
        report["J0"] = scalar_json(j0.value) if j0.kind == "finite" else j0.kind
        report["willmore"] = willmore_energy(j0)
        return report

    if verdict.kind == DUPIN_QUADRIC:
        report["class"] = None
        report.setdefault("notes", []).append(
            "rotational singular quadric; outside the quartic/cubic taxonomy")
    return report
