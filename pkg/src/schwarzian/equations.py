"""Autonomous Schwarzian equations S(u,z)^p = P(u)/Q(u) and their shapes.

``classify`` detects which of the six canonical shapes an equation already
has, from the multiplicity patterns of the numerator and denominator
roots.  It does not search for a reducing change of variable; use
``transform_equation`` with an explicitly supplied Mobius map instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .mobius import MobiusTransform
from .polynomials import (
    MERGE_LADDER,
    Polynomial,
    RationalFunction,
    assert_unambiguous,
    clustered_roots,
    reconstructs,
)

KINDS = ("I", "II", "III", "IV", "V", "VI")


@dataclass(frozen=True)
class SchwarzianEquation:
    """S(u,z)^p = R(u) with R a coprime rational function."""

    p: int
    rational: RationalFunction

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 1:
            raise ValueError(f"p must be a positive integer, got {self.p!r}")


@dataclass(frozen=True)
class CanonicalForm:
    """A recognized canonical shape: kind, scale c, and the root data.

    sigma is the numerator root multiset (entries repeated per
    multiplicity); tau is the denominator root tuple, ordered by
    descending multiplicity and then by descending (Re, Im).
    """

    kind: str
    c: complex
    sigma: tuple[complex, ...]
    tau: tuple[complex, ...]
    p: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        for i in range(len(self.tau)):
            for j in range(i + 1, len(self.tau)):
                gap = abs(self.tau[i] - self.tau[j])
                if gap <= 1e-12 * max(1.0, abs(self.tau[i])):
                    raise ValueError(
                        f"tau values must be pairwise distinct, got "
                        f"{self.tau[i]!r} and {self.tau[j]!r}"
                    )


@dataclass(frozen=True)
class NotCanonical:
    """Diagnostic result: the observed signature matched no canonical shape."""

    p: int
    numerator_pattern: tuple[int, ...]
    denominator_pattern: tuple[int, ...]
    reason: str


# kind -> (p, denominator pattern, numerator base multiplicity, sigma count).
# Numerator factors appear to the base power ((u-s)^3 for II/III, (u-s)^2
# for IV), so cluster multiplicities must be multiples of the base; equal
# sigmas simply merge into one cluster of doubled multiplicity.
_SHAPES = (
    ("I", 1, (1, 1, 1, 1), 1, 4),
    ("II", 3, (3, 2, 1), 3, 2),
    ("III", 3, (2, 2, 2), 3, 2),
    ("IV", 2, (2, 1, 1), 2, 2),
    ("V", 1, (1, 1), 1, 2),
)


def classify(eq: SchwarzianEquation):
    """Match the (p, root-pattern) signature against the canonical shapes.

    Root clustering walks a ladder of merge radii (an m-fold companion
    eigenvalue scatters by ~eps^(1/m)); a rung is used only when its
    refined clusters reproduce the polynomial coefficient-wise.
    """
    rat = eq.rational
    if rat.is_constant:
        return CanonicalForm(
            kind="VI", c=rat.constant_value, sigma=(), tau=(), p=eq.p
        )
    first_patterns = None
    for tol in MERGE_LADDER:
        num_clusters = clustered_roots(rat.numerator, tol)
        den_clusters = clustered_roots(rat.denominator, tol)
        if not (reconstructs(rat.numerator, num_clusters)
                and reconstructs(rat.denominator, den_clusters)):
            continue
        num_pattern = tuple(m for _, m in num_clusters)
        den_pattern = tuple(m for _, m in den_clusters)
        if first_patterns is None:
            first_patterns = (num_pattern, den_pattern)
        for kind, p, den_shape, base, count in _SHAPES:
            if eq.p != p or den_pattern != den_shape:
                continue
            if sum(num_pattern) != base * count:
                continue
            if any(m % base for m in num_pattern):
                continue
            assert_unambiguous(den_clusters, tol)
            assert_unambiguous(num_clusters, tol)
            sigma = tuple(
                r for r, m in sorted(
                    num_clusters, key=lambda cm: (-cm[0].real, -cm[0].imag)
                ) for _ in range(m // base)
            )
            tau = tuple(r for r, _ in den_clusters)
            c = rat.numerator.leading / rat.denominator.leading
            return CanonicalForm(kind=kind, c=c, sigma=sigma, tau=tau, p=eq.p)
    num_pattern, den_pattern = first_patterns or ((), ())
    return NotCanonical(
        p=eq.p,
        numerator_pattern=num_pattern,
        denominator_pattern=den_pattern,
        reason=(
            f"signature (p={eq.p}, numerator {num_pattern}, denominator "
            f"{den_pattern}) matches no canonical shape"
        ),
    )


def eval_R(rational: RationalFunction, w):
    """P(w)/Q(w) with extended-plane conventions."""
    return rational(w)


def transform_equation(eq: SchwarzianEquation, m: MobiusTransform) -> SchwarzianEquation:
    """The equation satisfied by v where u = m(v).

    Post-composition with a Mobius map leaves the Schwarzian unchanged, so
    p is preserved and R is replaced by R(m(v)), expanded and reduced to
    coprime polynomial form.
    """
    num = eq.rational.numerator
    den = eq.rational.denominator
    n = max(num.degree, den.degree)
    top = Polynomial((m.b, m.a))        # a*v + b
    bottom = Polynomial((m.d, m.c))     # c*v + d

    def compose(poly: Polynomial) -> Polynomial:
        out = Polynomial.zero()
        top_pow = Polynomial.one()
        bottom_pows = [Polynomial.one()]
        for _ in range(n):
            bottom_pows.append(bottom_pows[-1] * bottom)
        for k in range(n + 1):
            coeff = poly.coeffs[k] if k <= poly.degree else 0j
            if coeff != 0:
                out = out + (top_pow * bottom_pows[n - k]).scale(coeff)
            top_pow = top_pow * top
        return out

    return SchwarzianEquation(
        p=eq.p,
        rational=RationalFunction.cancelled(compose(num), compose(den)),
    )


def elementary_symmetric(tau) -> tuple[complex, complex, complex, complex]:
    """(e1, e2, e3, e4) for a 4-tuple: sums of 1-, 2-, 3-, 4-fold products."""
    t = [complex(x) for x in tau]
    if len(t) != 4:
        raise ValueError(f"expected 4 values, got {len(t)}")
    e1 = sum(t)
    e2 = sum(a * b for a, b in combinations(t, 2))
    e3 = sum(a * b * c for a, b, c in combinations(t, 3))
    e4 = t[0] * t[1] * t[2] * t[3]
    return (e1, e2, e3, e4)


def q_factor(tau, i: int) -> complex:
    """prod_{j != i} (tau_i - tau_j) with 1-based i; tau must be distinct."""
    t = [complex(x) for x in tau]
    if len(t) != 4:
        raise ValueError(f"expected 4 values, got {len(t)}")
    if not 1 <= i <= 4:
        raise ValueError(f"index must be in 1..4, got {i}")
    for a, b in combinations(t, 2):
        if a == b:
            raise ValueError(f"tau values must be distinct, got repeated {a!r}")
    out = 1.0 + 0j
    for j, tj in enumerate(t):
        if j != i - 1:
            out *= t[i - 1] - tj
    return out


DENOMINATOR_MULTIPLICITIES = {
    "I": (1, 1, 1, 1), "II": (3, 2, 1), "III": (2, 2, 2),
    "IV": (2, 1, 1), "V": (1, 1), "VI": (),
}
NUMERATOR_BASE_MULTIPLICITY = {"I": 1, "II": 3, "III": 3, "IV": 2, "V": 1, "VI": 0}


def equation_from_canonical(form: CanonicalForm) -> SchwarzianEquation:
    """Rebuild the equation S^p = c*prod(u-sigma_j)^b / prod(u-tau_j)^mj."""
    if form.kind == "VI":
        return SchwarzianEquation(
            p=form.p,
            rational=RationalFunction(Polynomial((form.c,)), Polynomial.one()),
        )
    base = NUMERATOR_BASE_MULTIPLICITY[form.kind]
    num = Polynomial.from_roots(
        [s for s in form.sigma for _ in range(base)], leading=form.c
    )
    den_roots = [
        t for t, m in zip(form.tau, DENOMINATOR_MULTIPLICITIES[form.kind])
        for _ in range(m)
    ]
    den = Polynomial.from_roots(den_roots)
    return SchwarzianEquation(p=form.p, rational=RationalFunction(num, den))
