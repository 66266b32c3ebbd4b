"""Complex polynomials and rational functions used by the equation model.

Coefficients are stored in ascending degree order with trailing zeros
trimmed; the zero polynomial is the empty coefficient tuple.  Roots come
from the companion matrix (np.roots) with a Newton polish, and close roots
are clustered into multiplicities with a relative tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AmbiguousMultiplicityError
from .extended import INF, is_inf, require_finite

CLUSTER_TOL = 1e-7
# Roots separated by less than this multiple of CLUSTER_TOL (yet not merged)
# cannot be safely called distinct when a shape demands distinctness.
AMBIGUITY_FACTOR = 100.0
TRIM_TOL = 0.0  # coefficients are trusted as given; only exact zeros trim


def _trim(coeffs) -> tuple[complex, ...]:
    cs = [complex(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class Polynomial:
    """A polynomial over C, coefficients ascending; () is the zero polynomial."""

    coeffs: tuple[complex, ...]

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", _trim(coeffs))
        for c in self.coeffs:
            require_finite(c, "coefficient")

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1.0,))

    @classmethod
    def from_roots(cls, roots, leading=1.0) -> "Polynomial":
        coeffs = np.polynomial.polynomial.polyfromroots(list(roots)) * complex(leading)
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> complex:
        if self.is_zero:
            return 0j
        return self.coeffs[-1]

    def __call__(self, w):
        """Horner evaluation; works for complex scalars and jet values."""
        if not self.coeffs:
            return 0j
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * w + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0j] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0j] * (n - len(other.coeffs))
        return Polynomial(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1.0)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial.zero()
        out = [0j] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    def scale(self, factor) -> "Polynomial":
        return Polynomial(tuple(complex(factor) * c for c in self.coeffs))

    def monic(self) -> "Polynomial":
        if self.is_zero:
            raise ValueError("the zero polynomial has no monic form")
        return self.scale(1.0 / self.leading)

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def roots(self) -> list[complex]:
        """All roots (with multiplicity), Newton-polished, sorted by (-Re, -Im)."""
        if self.degree < 1:
            return []
        raw = np.roots(list(reversed(self.coeffs)))
        deriv = self.derivative()
        out = []
        for r in raw:
            r = complex(r)
            for _ in range(3):
                d = deriv(r)
                if abs(d) <= 1e-8 * max(1.0, abs(r)) ** max(self.degree - 1, 0):
                    break  # multiple root: Newton stalls, companion value is fine
                step = self(r) / d
                if not (abs(step) < 1.0 + abs(r)):
                    break
                r = r - step
            out.append(r)
        out.sort(key=lambda t: (-t.real, -t.imag))
        return out


def cluster_roots(roots, tol: float = CLUSTER_TOL) -> list[tuple[complex, int]]:
    """Merge roots within tol*max(1,|root|) into (center, multiplicity) pairs.

    Output is sorted by descending multiplicity, then by (-Re, -Im) of the
    center, which makes multiplicity patterns deterministic.
    """
    clusters: list[list[complex]] = []
    for r in sorted(roots, key=lambda t: (-t.real, -t.imag)):
        for group in clusters:
            center = sum(group) / len(group)
            if abs(r - center) <= tol * max(1.0, abs(center)):
                group.append(r)
                break
        else:
            clusters.append([r])
    merged = [(sum(g) / len(g), len(g)) for g in clusters]
    merged.sort(key=lambda cm: (-cm[1], -cm[0].real, -cm[0].imag))
    return merged


# A companion-matrix eigenvalue approximating an m-fold root scatters by
# ~eps^(1/m), so multiple roots need coarser merge radii than simple ones.
# classify() walks this ladder, accepting a rung only when the refined
# clusters reproduce the polynomial coefficient-wise.
MERGE_LADDER = (CLUSTER_TOL, 2e-5, 4e-4)


def _refine_multiple_root(poly: Polynomial, center: complex, mult: int) -> complex:
    """An m-fold root of f is a simple root of f^(m-1): Newton-polish there."""
    target = poly
    for _ in range(mult - 1):
        target = target.derivative()
    deriv = target.derivative()
    x = center
    for _ in range(4):
        dv = deriv(x)
        if dv == 0:
            break
        step = target(x) / dv
        x = x - step
        if abs(step) <= 1e-14 * max(1.0, abs(x)):
            break
    return x


def clustered_roots(poly: Polynomial, tol: float = CLUSTER_TOL) -> list[tuple[complex, int]]:
    """Cluster the roots of ``poly`` at merge radius ``tol`` and polish every
    multiple root through the matching derivative."""
    clusters = cluster_roots(poly.roots(), tol)
    return [
        (center if mult == 1 else _refine_multiple_root(poly, center, mult), mult)
        for center, mult in clusters
    ]


def reconstructs(poly: Polynomial, clusters, rtol: float = 1e-8) -> bool:
    """Does prod (u - center)^mult * leading reproduce the coefficients?"""
    roots = [center for center, mult in clusters for _ in range(mult)]
    rebuilt = Polynomial.from_roots(roots, leading=poly.leading)
    if len(rebuilt.coeffs) != len(poly.coeffs):
        return False
    scale = max(abs(v) for v in poly.coeffs)
    return all(
        abs(a - b) <= rtol * scale for a, b in zip(rebuilt.coeffs, poly.coeffs)
    )


def assert_unambiguous(clusters, tol: float = CLUSTER_TOL) -> None:
    """Reject cluster sets whose centers are suspiciously close.

    Two distinct clusters closer than AMBIGUITY_FACTOR*tol could equally
    well be one double root at working precision.
    """
    for i in range(len(clusters)):
        for j in range(i + 1, len(clusters)):
            ci, cj = clusters[i][0], clusters[j][0]
            gap = abs(ci - cj)
            if gap < AMBIGUITY_FACTOR * tol * max(1.0, abs(ci), abs(cj)):
                raise AmbiguousMultiplicityError(
                    f"roots {ci!r} and {cj!r} are {gap:.3e} apart: cannot "
                    f"distinguish a multiple root from distinct roots"
                )


@dataclass(frozen=True)
class RationalFunction:
    """A ratio of coprime polynomials P/Q with complex coefficients."""

    numerator: Polynomial
    denominator: Polynomial

    def __init__(self, numerator: Polynomial, denominator: Polynomial):
        if denominator.is_zero:
            raise ValueError("denominator must not be the zero polynomial")
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)
        self._check_coprime()

    def _check_coprime(self):
        num, den = self.numerator, self.denominator
        if num.is_zero or num.is_constant or den.is_constant:
            return
        den_roots = den.roots()
        for r in num.roots():
            for s in den_roots:
                if abs(r - s) <= CLUSTER_TOL * max(1.0, abs(r)):
                    raise ValueError(
                        f"numerator and denominator share the root {r!r}; "
                        f"reduce the fraction first (see cancelled())"
                    )

    @classmethod
    def cancelled(cls, numerator: Polynomial, denominator: Polynomial) -> "RationalFunction":
        """Build P/Q after cancelling common roots within tolerance.

        When nothing cancels the inputs are kept verbatim (rebuilding from
        roots would trade exact coefficients for root-finder noise)."""
        if denominator.is_zero:
            raise ValueError("denominator must not be the zero polynomial")
        if numerator.is_zero:
            return cls(Polynomial.zero(), Polynomial.one())
        num_roots = numerator.roots()
        den_roots = denominator.roots()
        removed = 0
        for r in list(num_roots):
            for s in list(den_roots):
                if abs(r - s) <= CLUSTER_TOL * max(1.0, abs(r), abs(s)):
                    num_roots.remove(r)
                    den_roots.remove(s)
                    removed += 1
                    break
        if removed == 0:
            return cls(numerator, denominator)
        num = Polynomial.from_roots(num_roots, leading=numerator.leading)
        den = Polynomial.from_roots(den_roots, leading=denominator.leading)
        return cls(num, den)

    @property
    def is_constant(self) -> bool:
        return self.numerator.is_constant and self.denominator.is_constant

    @property
    def constant_value(self) -> complex:
        if not self.is_constant:
            raise ValueError("rational function is not constant")
        return self.numerator(0j) / self.denominator(0j)

    def __call__(self, w):
        """Evaluate with extended-plane conventions (total function)."""
        if is_inf(w):
            dn = self.numerator.degree
            dd = self.denominator.degree
            if dn > dd:
                return INF
            if dn < dd:
                return 0j
            return self.numerator.leading / self.denominator.leading
        num = self.numerator(w)
        den = self.denominator(w)
        if den == 0:
            return INF if num != 0 else 0j  # coprimality makes num != 0 here
        return num / den
