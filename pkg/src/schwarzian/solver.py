"""Construction of the exact solutions for each canonical equation shape.

The quartic-denominator shape (kind I) is solved through the closed
parameter relations: with a = tau_i and e_1..e_4 the elementary symmetric
functions of tau,

    r0 = b/(2q_i) (3 e3^2 - 8 e2 e4)        r1 = 2b/q_i (6 e1 e4 - e2 e3)
    r2 = b/q_i (2 e2^2 - 3 e1 e3 - 24 e4)   r3 = 2b/q_i (6 e3 - e1 e2)
    r4 = b/(2q_i) (3 e1^2 - 8 e2)

    d  = b/(6q_i) [ sum_{j<k, j,k != i} (tau_j - tau_k)^2
                    - 2 sum_{j != i} (tau_i - tau_j)^2 ]
    g2 = 4b^2/(3q_i^2) (e2^2 - 3 e1 e3 + 12 e4)
    g3 = 4b^3/(27q_i^3) (2 e2^3 - 9 e1 e2 e3 - 72 e2 e4 + 27 e3^2 + 27 e1^2 e4)

with the discriminant identity g2^3 - 27 g3^2 = 16 b^6/q_i^6 *
prod_{j<k} (tau_j - tau_k)^2, nonzero for distinct tau and b != 0.

Kinds II-IV admit solutions only for one specific numerator-root pair and
are rational in (p, p'); kind V with the sine pattern and kind VI reduce
to elementary functions.  Every constructor certifies its output against
the source equation before returning it.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from itertools import combinations

from .certify import certify_solution
from .equations import (
    CanonicalForm,
    SchwarzianEquation,
    elementary_symmetric,
    equation_from_canonical,
    q_factor,
)
from .errors import CertificationError, NoTranscendentalSolutionError
from .extended import require_finite
from .mobius import MobiusTransform
from .polynomials import Polynomial, RationalFunction
from .solutions import (
    EllipticFractionalSolution,
    ExpSolution,
    TrigSolution,
    WpRationalSolution,
)
from .weierstrass import WeierstrassInvariants

RELATION_TOL = 1e-8
SIGMA_TOL = 1e-6
TAU_TOL = 1e-9
CERT_SAMPLES = 50
CERT_TOL = 1e-6

TYPE2_TAU = (4.0 + 0j, -3.0 + 0j, 0j)
TYPE4_TAU = (0j, 1.0 + 0j, -1.0 + 0j)
TYPE2_SIGMA = 5 ** 0.5 * 1j
TYPE3_SIGMA = 1j / 3 ** 0.5
TYPE4_SIGMA = 0.5j
TYPE5_SIGMA = 2 ** 0.5 * 1j


@dataclass(frozen=True)
class TypeICoefficients:
    """Numerator coefficients r0..r4 over the monic quartic denominator."""

    r: tuple[complex, complex, complex, complex, complex]
    tau: tuple[complex, complex, complex, complex]

    def __post_init__(self):
        object.__setattr__(self, "r", tuple(require_finite(v, "r") for v in self.r))
        object.__setattr__(self, "tau", tuple(require_finite(v, "tau") for v in self.tau))
        if len(self.r) != 5 or len(self.tau) != 4:
            raise ValueError("expected 5 coefficients and 4 tau values")
        if all(v == 0 for v in self.r):
            raise ValueError("coefficient vector must not be identically zero")
        for a, b in combinations(self.tau, 2):
            if a == b:
                raise ValueError(f"tau values must be distinct, got repeated {a!r}")

    @classmethod
    def from_canonical(cls, form: CanonicalForm) -> "TypeICoefficients":
        if form.kind != "I":
            raise ValueError(f"expected a kind-I form, got {form.kind}")
        num = Polynomial.from_roots(form.sigma, leading=form.c)
        coeffs = list(num.coeffs) + [0j] * (5 - len(num.coeffs))
        return cls(r=tuple(coeffs[:5]), tau=form.tau)

    @classmethod
    def from_equation(cls, eq: SchwarzianEquation, form: CanonicalForm) -> "TypeICoefficients":
        """Extract r directly from the raw polynomials (no root roundtrip):
        divide the numerator by the denominator's leading coefficient."""
        if form.kind != "I":
            raise ValueError(f"expected a kind-I form, got {form.kind}")
        lead = eq.rational.denominator.leading
        coeffs = [c / lead for c in eq.rational.numerator.coeffs]
        coeffs += [0j] * (5 - len(coeffs))
        return cls(r=tuple(coeffs[:5]), tau=form.tau)

    def equation(self) -> SchwarzianEquation:
        return SchwarzianEquation(
            p=1,
            rational=RationalFunction(
                Polynomial(self.r), Polynomial.from_roots(self.tau)
            ),
        )


@dataclass(frozen=True)
class NoSolution:
    """No solution exists (or none for the supplied normalization)."""

    reason: str
    diagnostics: dict | None = None


@dataclass(frozen=True)
class Unresolved:
    """Existence is not settled: the equation lacks the sine pattern, and
    solutions without a Picard exceptional value are an open question."""

    reason: str


def _relation_brackets(e1, e2, e3, e4):
    """The five bracket factors multiplying b/q_i (halves folded in)."""
    return (
        (3 * e3 ** 2 - 8 * e2 * e4) / 2,     # r0
        2 * (6 * e1 * e4 - e2 * e3),         # r1
        2 * e2 ** 2 - 3 * e1 * e3 - 24 * e4, # r2
        2 * (6 * e3 - e1 * e2),              # r3
        (3 * e1 ** 2 - 8 * e2) / 2,          # r4
    )


def _pair_sum_sq(values) -> complex:
    return sum((a - b) ** 2 for a, b in combinations(values, 2))


def generate_type1(tau, i: int, b, z0=0j) -> tuple[TypeICoefficients, EllipticFractionalSolution]:
    """Forward construction: emit the coefficient vector and its solution."""
    b = require_finite(b, "b")
    if b == 0:
        raise ValueError("b must be nonzero")
    tau = tuple(require_finite(t, "tau") for t in tau)
    e1, e2, e3, e4 = elementary_symmetric(tau)
    q = q_factor(tau, i)
    brackets = _relation_brackets(e1, e2, e3, e4)
    r = tuple(b / q * br for br in brackets)
    coeffs = TypeICoefficients(r=r, tau=tau)
    a = tau[i - 1]
    others = [tau[j] for j in range(4) if j != i - 1]
    d = b / (6 * q) * (_pair_sum_sq(others) - 2 * sum((a - t) ** 2 for t in others))
    g2 = 4 * b ** 2 / (3 * q ** 2) * (e2 ** 2 - 3 * e1 * e3 + 12 * e4)
    g3 = 4 * b ** 3 / (27 * q ** 3) * (
        2 * e2 ** 3 - 9 * e1 * e2 * e3 - 72 * e2 * e4 + 27 * e3 ** 2
        + 27 * e1 ** 2 * e4
    )
    inv = WeierstrassInvariants(g2=g2, g3=g3)
    predicted = 16 * b ** 6 / q ** 6 * _product_pair_sq(tau)
    if abs(inv.discriminant - predicted) > 1e-8 * max(1.0, abs(predicted)):
        raise CertificationError(
            f"discriminant identity violated: {inv.discriminant!r} vs {predicted!r}"
        )
    solution = EllipticFractionalSolution(a=a, b=b, d=d, invariants=inv, z0=z0)
    _certify_or_raise(solution, coeffs.equation())
    return coeffs, solution


def _product_pair_sq(tau) -> complex:
    out = 1.0 + 0j
    for a, b in combinations(tau, 2):
        out *= (a - b) ** 2
    return out


def solve_type1(coeffs: TypeICoefficients, z0=0j, anchor=None):
    """Invert the parameter relations; the first consistent tau index wins.

    b is extracted from whichever of the r4/r3/r1/r0 relations has the
    largest bracket factor, then all five relations are verified.

    The bracket factors do not depend on the index i, so when the relations
    are consistent at all they are consistent for every i, with b scaled by
    q_i: the four branches are translates (by half-periods) of one solution
    family.  ``anchor`` picks the expansion point: only indices with
    tau_i == anchor are tried, which selects the branch whose value at the
    lattice points of p is the given number.
    """
    tau = coeffs.tau
    r = coeffs.r
    e1, e2, e3, e4 = elementary_symmetric(tau)
    r_scale = max(1.0, max(abs(v) for v in r))
    diagnostics = {}
    all_brackets_zero = True
    if anchor is None:
        indices = (1, 2, 3, 4)
    else:
        anchor = require_finite(anchor, "anchor")
        indices = tuple(
            i for i in (1, 2, 3, 4)
            if abs(tau[i - 1] - anchor) <= TAU_TOL * max(1.0, abs(anchor))
        )
        if not indices:
            return NoSolution(
                reason=f"anchor {anchor!r} matches no tau value in {tau!r}"
            )
    brackets = _relation_brackets(e1, e2, e3, e4)
    # extraction candidates, in the fixed preference order r4, r3, r1, r0
    candidates = [(4, brackets[4]), (3, brackets[3]), (1, brackets[1]), (0, brackets[0])]
    idx, bracket = max(candidates, key=lambda kb: abs(kb[1]))
    for i in indices:
        q = q_factor(tau, i)
        if abs(bracket) <= 1e-12 * max(1.0, abs(e1) ** 2 + abs(e2)):
            diagnostics[i] = "all usable bracket factors vanish"
            continue
        all_brackets_zero = False
        b = r[idx] * q / bracket
        if b == 0:
            diagnostics[i] = "extracted b = 0"
            continue
        residual = max(
            abs(r[k] - b / q * brackets[k]) for k in range(5)
        )
        if residual > RELATION_TOL * r_scale:
            diagnostics[i] = f"relation residual {residual:.3e}"
            continue
        _, solution = generate_type1(tau, i, b, z0=z0)
        return solution
    if all_brackets_zero:
        raise ValueError(
            "every bracket factor vanishes for every tau index; "
            "the parameter relations are degenerate"
        )
    return NoSolution(
        reason="no tau index satisfies all five parameter relations",
        diagnostics=diagnostics,
    )


def _sigma_matches(sigma, target) -> bool:
    """Is the sigma multiset {target, -target} within tolerance?"""
    if len(sigma) != 2:
        return False
    s1, s2 = sigma
    tol = SIGMA_TOL * max(1.0, abs(target))
    return (abs(s1 - target) <= tol and abs(s2 + target) <= tol) or (
        abs(s1 + target) <= tol and abs(s2 - target) <= tol
    )


def _tau_matches(tau, target) -> bool:
    if len(tau) != len(target):
        return False
    return all(
        abs(a - b) <= TAU_TOL * max(1.0, abs(b)) for a, b in zip(tau, target)
    )


def solve_type2(c, sigma, z0=0j):
    """Triple/double/simple denominator shape at tau = (4, -3, 0)."""
    c = require_finite(c, "c")
    if c == 0:
        return NoSolution(reason="c must be nonzero for this shape")
    if not _sigma_matches(sigma, TYPE2_SIGMA):
        return NoSolution(
            reason=f"sigma pattern inadmissible: expected {{sqrt(5)i, -sqrt(5)i}}, "
                   f"got {tuple(sigma)!r}"
        )
    inv = WeierstrassInvariants(g2=0j, g3=c / 10584)
    solution = WpRationalSolution(family_kind="II", c=c, invariants=inv, z0=z0)
    form = CanonicalForm(kind="II", c=c, sigma=(TYPE2_SIGMA, -TYPE2_SIGMA),
                         tau=TYPE2_TAU, p=3)
    _certify_or_raise(solution, equation_from_canonical(form))
    return solution


def _principal_root(w, n: int, branch: int = 0) -> complex:
    root = cmath.exp(cmath.log(w) / n)
    if branch % n:
        root *= cmath.exp(2j * cmath.pi * (branch % n) / n)
    return root


def solve_type3(c, sigma, z0=0j, branch: int = 0):
    """All-double denominator shape on the tau set {0, 1, -1}."""
    c = require_finite(c, "c")
    if c == 0:
        return NoSolution(reason="c must be nonzero for this shape")
    if not _sigma_matches(sigma, TYPE3_SIGMA):
        return NoSolution(
            reason=f"sigma pattern inadmissible: expected {{i/sqrt(3), -i/sqrt(3)}}, "
                   f"got {tuple(sigma)!r}"
        )
    ell = _principal_root(-27 * c / 64, 6, branch)
    inv = WeierstrassInvariants(g2=0j, g3=c / 432)
    solution = WpRationalSolution(
        family_kind="III", c=c, invariants=inv, scale=ell, z0=z0
    )
    form = CanonicalForm(kind="III", c=c, sigma=(TYPE3_SIGMA, -TYPE3_SIGMA),
                         tau=(1.0 + 0j, 0j, -1.0 + 0j), p=3)
    _certify_or_raise(solution, equation_from_canonical(form))
    return solution


def solve_type4(c, sigma, z0=0j, branch: int = 0):
    """Double/simple/simple denominator shape at tau = (0, 1, -1)."""
    c = require_finite(c, "c")
    if c == 0:
        return NoSolution(reason="c must be nonzero for this shape")
    if not _sigma_matches(sigma, TYPE4_SIGMA):
        return NoSolution(
            reason=f"sigma pattern inadmissible: expected {{i/2, -i/2}}, "
                   f"got {tuple(sigma)!r}"
        )
    ell = _principal_root(4 * c / 9, 4, branch)
    inv = WeierstrassInvariants(g2=-c / 36, g3=0j)
    solution = WpRationalSolution(
        family_kind="IV", c=c, invariants=inv, scale=ell, z0=z0
    )
    form = CanonicalForm(kind="IV", c=c, sigma=(TYPE4_SIGMA, -TYPE4_SIGMA),
                         tau=TYPE4_TAU, p=2)
    _certify_or_raise(solution, equation_from_canonical(form))
    return solution


def solve_type5(c, form: CanonicalForm, beta=0j, branch: int = 0):
    """Degree-(2,2) shape: sine solutions when the sigma pattern matches.

    The tau pair is mapped affinely onto {1, -1}; under an affine change of
    variable c is unchanged and sigma maps along.  A pattern mismatch
    returns Unresolved, not NoSolution: solutions without a Picard
    exceptional value are not ruled out.
    """
    c = require_finite(c, "c")
    if form.kind != "V":
        raise ValueError(f"expected a kind-V form, got {form.kind}")
    if c == 0:
        return Unresolved(reason="c = 0 leaves only Mobius maps")
    t1, t2 = form.tau
    half_span = (t1 - t2) / 2
    center = (t1 + t2) / 2
    normalized_sigma = tuple((s - center) / half_span for s in form.sigma)
    if not _sigma_matches(normalized_sigma, TYPE5_SIGMA):
        return Unresolved(
            reason=f"sigma pattern (normalized to {tuple(normalized_sigma)!r}) is not "
                   f"{{sqrt(2)i, -sqrt(2)i}}; existence of solutions without a "
                   f"Picard exceptional value is open"
        )
    alpha = _principal_root(2 * c, 2, branch)
    outer = MobiusTransform(half_span, center, 0, 1)  # w -> half_span*w + center
    solution = TrigSolution(alpha=alpha, beta=require_finite(beta, "beta"), outer=outer)
    _certify_or_raise(solution, equation_from_canonical(form))
    return solution


def solve_type6(c, p: int, branch: int = 0) -> ExpSolution:
    """Constant right-hand side: exponential solutions.

    ``c`` is the constant value of R, so the equation reads S(u,z)^p = c.
    For p = 1 this gives alpha = sqrt(-2c); for larger p, alpha =
    sqrt(-2) c^(1/(2p)) with principal branches throughout.
    """
    c = require_finite(c, "c")
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"p must be a positive integer, got {p!r}")
    if c == 0:
        raise NoTranscendentalSolutionError(
            "S(u,z) = 0 characterizes Mobius maps; no transcendental solution"
        )
    if p == 1:
        alpha = _principal_root(-2 * c, 2, branch)
    else:
        alpha = cmath.sqrt(-2) * _principal_root(c, 2 * p, branch)
    solution = ExpSolution(alpha=alpha)
    eq = SchwarzianEquation(
        p=p, rational=RationalFunction(Polynomial((c,)), Polynomial.one())
    )
    _certify_or_raise(solution, eq)
    return solution


@dataclass(frozen=True)
class SubequationSpec:
    """First-order companion equation u'^n = K prod (u - root_i)^{m_i}."""

    n: int
    K: complex
    factors: tuple[tuple[complex, int], ...]

    _PATTERNS = {2: (1, 1, 1, 1), 6: (5, 4, 3), 3: (2, 2, 2), 4: (3, 3, 2)}

    def __post_init__(self):
        object.__setattr__(self, "K", require_finite(self.K, "K"))
        object.__setattr__(
            self,
            "factors",
            tuple((require_finite(r, "root"), int(m)) for r, m in self.factors),
        )
        if self.n not in self._PATTERNS:
            raise ValueError(f"n must be one of {sorted(self._PATTERNS)}, got {self.n}")
        if self.K == 0:
            raise ValueError("K must be nonzero (the trivial constant case is excluded)")
        pattern = tuple(sorted((m for _, m in self.factors), reverse=True))
        if pattern != self._PATTERNS[self.n]:
            raise ValueError(
                f"multiplicities {pattern} do not match the n = {self.n} "
                f"pattern {self._PATTERNS[self.n]}"
            )


def subequation_residual(solution, spec: SubequationSpec, z) -> complex:
    """u'(z)^n - K prod (u(z) - root_i)^{m_i} from the exact jet."""
    jet = solution.jet(z)
    rhs = spec.K
    for root, mult in spec.factors:
        rhs *= (jet.f - root) ** mult
    return jet.f1 ** spec.n - rhs


def fit_subequation_scale(solution, n: int, factors, z_probe) -> complex:
    """Recover K by evaluating the defining ratio at one generic point."""
    jet = solution.jet(z_probe)
    denom = 1.0 + 0j
    for root, mult in factors:
        denom *= (jet.f - root) ** mult
    if denom == 0:
        raise ValueError(f"probe point {z_probe!r} sits on a factor root")
    return jet.f1 ** n / denom


def type1_subequation(coeffs: TypeICoefficients, solution: EllipticFractionalSolution) -> SubequationSpec:
    """The u'^2 companion equation; K = -4b/q_i in closed form."""
    i = 1 + list(coeffs.tau).index(solution.a)
    scale = -4 * solution.b / q_factor(coeffs.tau, i)
    return SubequationSpec(
        n=2, K=scale, factors=tuple((t, 1) for t in coeffs.tau)
    )


def _certify_or_raise(solution, eq: SchwarzianEquation) -> None:
    report = certify_solution(
        solution, eq.p, eq.rational, samples=CERT_SAMPLES, tolerance=CERT_TOL
    )
    if not report.passed:
        raise CertificationError(
            f"constructed {solution.family} solution fails its own residual "
            f"check: max relative residual {report.max_rel_residual:.3e} at "
            f"z = {report.worst_point!r}"
        )


def solve_canonical(form: CanonicalForm, z0=0j, beta=0j, branch: int = 0):
    """Dispatch a classified canonical form to the matching constructor.

    Kinds II-IV require the normalization the closed-form solutions are
    stated in; other tau configurations are reported back (apply
    transform_equation with a suitable Mobius map first).
    """
    if form.kind == "I":
        return solve_type1(TypeICoefficients.from_canonical(form), z0=z0)
    if form.kind == "II":
        if not _tau_matches(form.tau, TYPE2_TAU):
            return NoSolution(
                reason=f"tau = {form.tau!r} is not the normalized (4, -3, 0); "
                       f"transform the equation first"
            )
        return solve_type2(form.c, form.sigma, z0=z0)
    if form.kind == "III":
        if not _tau_set_matches(form.tau, (0j, 1 + 0j, -1 + 0j)):
            return NoSolution(
                reason=f"tau set {form.tau!r} is not the normalized {{0, 1, -1}}; "
                       f"transform the equation first"
            )
        return solve_type3(form.c, form.sigma, z0=z0, branch=branch)
    if form.kind == "IV":
        if not _tau_matches(form.tau, TYPE4_TAU):
            return NoSolution(
                reason=f"tau = {form.tau!r} is not the normalized (0, 1, -1) with "
                       f"the double root first; transform the equation first"
            )
        return solve_type4(form.c, form.sigma, z0=z0, branch=branch)
    if form.kind == "V":
        return solve_type5(form.c, form, beta=beta, branch=branch)
    return solve_type6(form.c, form.p, branch=branch)


def _tau_set_matches(tau, target) -> bool:
    remaining = list(target)
    for t in tau:
        for cand in remaining:
            if abs(t - cand) <= TAU_TOL * max(1.0, abs(cand)):
                remaining.remove(cand)
                break
        else:
            return False
    return not remaining


def solve_equation(eq: SchwarzianEquation, z0=0j, beta=0j, branch: int = 0,
                   anchor=None):
    """Classify and solve in one step.

    Returns (classification, outcome) where classification is a
    CanonicalForm or NotCanonical and outcome is a solution object,
    NoSolution, or Unresolved.  ``anchor`` selects the expansion branch for
    the quartic shape; ``branch`` rotates root choices elsewhere.
    """
    from .equations import NotCanonical, classify

    form = classify(eq)
    if isinstance(form, NotCanonical):
        return form, NoSolution(reason=f"equation is not canonical: {form.reason}")
    if form.kind == "I":
        return form, solve_type1(
            TypeICoefficients.from_equation(eq, form), z0=z0, anchor=anchor
        )
    return form, solve_canonical(form, z0=z0, beta=beta, branch=branch)
