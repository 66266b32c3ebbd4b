"""JSON document codecs shared by the CLI and the HTTP service.

A complex number is encoded as a two-element array [re, im] of finite
IEEE-754 doubles; polynomials as ascending coefficient arrays.  Equation
documents come in two shapes:

    {"p": 1, "numerator": [[re,im], ...], "denominator": [[re,im], ...]}
    {"kind": "I".."VI", "c": [re,im], "sigma": [...], "tau": [...], "p": int?}

Solution documents are tagged by "family"; see solution_to_dict.
"""

from __future__ import annotations

import math

from .equations import (
    CanonicalForm,
    NotCanonical,
    SchwarzianEquation,
    equation_from_canonical,
)
from .certify import ResidualReport
from .errors import DocumentError
from .mobius import MobiusTransform
from .polynomials import Polynomial, RationalFunction
from .solutions import (
    EllipticFractionalSolution,
    ExpSolution,
    TrigSolution,
    WpRationalSolution,
)
from .weierstrass import LatticeData, WeierstrassInvariants

KIND_NAMES = ("I", "II", "III", "IV", "V", "VI")


def complex_to_pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def pair_to_complex(value, where: str = "value") -> complex:
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in value)
    ):
        raise DocumentError(f"{where}: expected a two-element [re, im] array, got {value!r}")
    re, im = float(value[0]), float(value[1])
    if not (math.isfinite(re) and math.isfinite(im)):
        raise DocumentError(f"{where}: components must be finite, got {value!r}")
    return complex(re, im)


def _pairs_to_complex_list(values, where: str) -> list[complex]:
    if not isinstance(values, (list, tuple)):
        raise DocumentError(f"{where}: expected an array, got {values!r}")
    return [pair_to_complex(v, f"{where}[{k}]") for k, v in enumerate(values)]


def equation_to_dict(eq: SchwarzianEquation) -> dict:
    return {
        "p": eq.p,
        "numerator": [complex_to_pair(c) for c in eq.rational.numerator.coeffs],
        "denominator": [complex_to_pair(c) for c in eq.rational.denominator.coeffs],
    }


def equation_from_dict(doc) -> SchwarzianEquation:
    if not isinstance(doc, dict):
        raise DocumentError(f"equation document must be an object, got {type(doc).__name__}")
    if "kind" in doc:
        return equation_from_canonical(canonical_form_from_dict(doc))
    for key in ("numerator", "denominator"):
        if key not in doc:
            raise DocumentError(f"equation document missing '{key}'")
    p = doc.get("p", 1)
    if not isinstance(p, int) or isinstance(p, bool) or p < 1:
        raise DocumentError(f"p must be a positive integer, got {p!r}")
    num = Polynomial(_pairs_to_complex_list(doc["numerator"], "numerator"))
    den = Polynomial(_pairs_to_complex_list(doc["denominator"], "denominator"))
    if den.is_zero:
        raise DocumentError("denominator must not be the zero polynomial")
    try:
        rational = RationalFunction(num, den)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    return SchwarzianEquation(p=p, rational=rational)


def canonical_form_to_dict(form: CanonicalForm) -> dict:
    return {
        "kind": form.kind,
        "c": complex_to_pair(form.c),
        "sigma": [complex_to_pair(s) for s in form.sigma],
        "tau": [complex_to_pair(t) for t in form.tau],
        "p": form.p,
    }


def canonical_form_from_dict(doc) -> CanonicalForm:
    kind = doc.get("kind")
    if kind not in KIND_NAMES:
        raise DocumentError(f"kind must be one of {KIND_NAMES}, got {kind!r}")
    if "c" not in doc:
        raise DocumentError("canonical equation document missing 'c'")
    c = pair_to_complex(doc["c"], "c")
    sigma = tuple(_pairs_to_complex_list(doc.get("sigma", []), "sigma"))
    tau = tuple(_pairs_to_complex_list(doc.get("tau", []), "tau"))
    default_p = {"I": 1, "II": 3, "III": 3, "IV": 2, "V": 1, "VI": 1}[kind]
    p = doc.get("p", default_p)
    if not isinstance(p, int) or isinstance(p, bool) or p < 1:
        raise DocumentError(f"p must be a positive integer, got {p!r}")
    if kind != "VI" and p != default_p:
        raise DocumentError(f"kind {kind} requires p = {default_p}, got {p}")
    expected_sigma = {"I": 4, "II": 2, "III": 2, "IV": 2, "V": 2, "VI": 0}[kind]
    expected_tau = {"I": 4, "II": 3, "III": 3, "IV": 3, "V": 2, "VI": 0}[kind]
    if len(sigma) != expected_sigma:
        raise DocumentError(f"kind {kind} needs {expected_sigma} sigma entries, got {len(sigma)}")
    if len(tau) != expected_tau:
        raise DocumentError(f"kind {kind} needs {expected_tau} tau entries, got {len(tau)}")
    try:
        return CanonicalForm(kind=kind, c=c, sigma=sigma, tau=tau, p=p)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def not_canonical_to_dict(result: NotCanonical) -> dict:
    return {
        "canonical": False,
        "p": result.p,
        "numerator_pattern": list(result.numerator_pattern),
        "denominator_pattern": list(result.denominator_pattern),
        "reason": result.reason,
    }


def invariants_to_dict(inv: WeierstrassInvariants) -> dict:
    return {"g2": complex_to_pair(inv.g2), "g3": complex_to_pair(inv.g3)}


def invariants_from_dict(doc, where: str = "invariants") -> WeierstrassInvariants:
    if not isinstance(doc, dict) or "g2" not in doc or "g3" not in doc:
        raise DocumentError(f"{where}: expected an object with 'g2' and 'g3'")
    return WeierstrassInvariants(
        g2=pair_to_complex(doc["g2"], f"{where}.g2"),
        g3=pair_to_complex(doc["g3"], f"{where}.g3"),
    )


def mobius_to_list(m: MobiusTransform) -> list:
    return [complex_to_pair(v) for v in m.coefficients()]


def mobius_from_list(value, where: str = "outer") -> MobiusTransform:
    coeffs = _pairs_to_complex_list(value, where)
    if len(coeffs) != 4:
        raise DocumentError(f"{where}: expected 4 coefficients, got {len(coeffs)}")
    try:
        return MobiusTransform(*coeffs)
    except ValueError as exc:
        raise DocumentError(f"{where}: {exc}") from exc


def solution_to_dict(solution) -> dict:
    if isinstance(solution, EllipticFractionalSolution):
        return {
            "family": "elliptic-fractional",
            "a": complex_to_pair(solution.a),
            "b": complex_to_pair(solution.b),
            "d": complex_to_pair(solution.d),
            "z0": complex_to_pair(solution.z0),
            "invariants": invariants_to_dict(solution.invariants),
        }
    if isinstance(solution, WpRationalSolution):
        doc = {
            "family": solution.family,
            "c": complex_to_pair(solution.c),
            "z0": complex_to_pair(solution.z0),
            "invariants": invariants_to_dict(solution.invariants),
        }
        if solution.scale is not None:
            doc["L"] = complex_to_pair(solution.scale)
        return doc
    if isinstance(solution, TrigSolution):
        return {
            "family": "trig",
            "alpha": complex_to_pair(solution.alpha),
            "beta": complex_to_pair(solution.beta),
            "outer": mobius_to_list(solution.outer),
        }
    if isinstance(solution, ExpSolution):
        return {
            "family": "exp",
            "alpha": complex_to_pair(solution.alpha),
            "outer": mobius_to_list(solution.outer),
        }
    raise DocumentError(f"unknown solution object {type(solution).__name__}")


def solution_from_dict(doc):
    if not isinstance(doc, dict):
        raise DocumentError(f"solution document must be an object, got {type(doc).__name__}")
    family = doc.get("family")
    try:
        if family == "elliptic-fractional":
            return EllipticFractionalSolution(
                a=pair_to_complex(doc.get("a"), "a"),
                b=pair_to_complex(doc.get("b"), "b"),
                d=pair_to_complex(doc.get("d"), "d"),
                z0=pair_to_complex(doc.get("z0", [0.0, 0.0]), "z0"),
                invariants=invariants_from_dict(doc.get("invariants")),
            )
        if family in ("wp-rational-II", "wp-rational-III", "wp-rational-IV"):
            kind = family.rsplit("-", 1)[1]
            scale = None
            if kind in ("III", "IV"):
                if "L" not in doc:
                    raise DocumentError(f"{family} requires the scale entry 'L'")
                scale = pair_to_complex(doc["L"], "L")
            return WpRationalSolution(
                family_kind=kind,
                c=pair_to_complex(doc.get("c"), "c"),
                invariants=invariants_from_dict(doc.get("invariants")),
                scale=scale,
                z0=pair_to_complex(doc.get("z0", [0.0, 0.0]), "z0"),
            )
        if family == "trig":
            return TrigSolution(
                alpha=pair_to_complex(doc.get("alpha"), "alpha"),
                beta=pair_to_complex(doc.get("beta", [0.0, 0.0]), "beta"),
                outer=mobius_from_list(doc.get("outer", [[1, 0], [0, 0], [0, 0], [1, 0]])),
            )
        if family == "exp":
            return ExpSolution(
                alpha=pair_to_complex(doc.get("alpha"), "alpha"),
                outer=mobius_from_list(doc.get("outer", [[1, 0], [0, 0], [0, 0], [1, 0]])),
            )
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    raise DocumentError(
        f"unknown solution family {family!r}; expected elliptic-fractional, "
        f"wp-rational-II/III/IV, trig, or exp"
    )


def report_to_dict(report: ResidualReport) -> dict:
    return {
        "sample_count": report.sample_count,
        "max_abs_residual": report.max_abs_residual,
        "max_rel_residual": report.max_rel_residual,
        "worst_point": complex_to_pair(report.worst_point),
        "excluded_points": report.excluded_points,
        "pass": report.passed,
        "tolerance": report.tolerance,
    }


def lattice_to_dict(lattice: LatticeData) -> dict:
    return {
        "omega1": complex_to_pair(lattice.omega1),
        "omega3": complex_to_pair(lattice.omega3),
        "stationary_values": [complex_to_pair(e) for e in lattice.stationary_values],
    }
