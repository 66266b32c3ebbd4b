"""Closed-form solution families, each evaluable with derivatives to order 3.

Every family exposes ``jet(z)`` returning the exact third-order jet, built
by jet arithmetic from the base function (the Weierstrass function, sine,
or the exponential) so that composite formulas carry exact derivatives.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PoleProximityError
from .extended import require_finite
from .jets import Jet, exp_jet, mobius_jet, sin_jet
from .mobius import MobiusTransform
from .weierstrass import WeierstrassInvariants, wp_with_prime

FAMILY_II = "II"
FAMILY_III = "III"
FAMILY_IV = "IV"
_INV_TOL = 1e-9


def wp_jet(z, inv: WeierstrassInvariants) -> Jet:
    """Jet of the Weierstrass function: p' from the ODE, then
    p'' = 6p^2 - g2/2 and p''' = 12 p p'."""
    p, dp = wp_with_prime(z, inv)
    return Jet(p, dp, 6 * p * p - inv.g2 / 2, 12 * p * dp)


def wp_prime_jet(z, inv: WeierstrassInvariants) -> Jet:
    """Jet of p': derivatives are p'', p''' and p'''' = 12(p'^2 + p p'')."""
    p, dp = wp_with_prime(z, inv)
    d2 = 6 * p * p - inv.g2 / 2
    d3 = 12 * p * dp
    d4 = 12 * (dp * dp + p * d2)
    return Jet(dp, d2, d3, d4)


def _jet_guarding_poles(build, z, what: str) -> Jet:
    try:
        return build(z)
    except ZeroDivisionError:
        raise PoleProximityError(f"{what} has a pole at z = {z!r}") from None


@dataclass(frozen=True)
class EllipticFractionalSolution:
    """u(z) = a - b / (p(z - z0) - d), an elliptic function of order two."""

    a: complex
    b: complex
    d: complex
    invariants: WeierstrassInvariants
    z0: complex = 0j

    def __post_init__(self):
        for name in ("a", "b", "d", "z0"):
            object.__setattr__(self, name, require_finite(getattr(self, name), name))
        if self.b == 0:
            raise ValueError("b must be nonzero (the solution would be constant)")
        if self.invariants.is_degenerate:
            raise ValueError("invariants are degenerate: discriminant vanishes")

    @property
    def family(self) -> str:
        return "elliptic-fractional"

    def jet(self, z) -> Jet:
        w = require_finite(z, "z") - self.z0
        try:
            p_jet = wp_jet(w, self.invariants)
        except PoleProximityError as exc:
            # p blows up but u is regular there: u -> a with u' = 0.
            raise PoleProximityError(str(exc), limit_value=self.lattice_limit_jet()) from None
        return _jet_guarding_poles(
            lambda _: self.a - self.b * (p_jet - self.d).reciprocal(), z, "u"
        )

    def lattice_limit_jet(self) -> Jet:
        """Limit jet as z -> z0 (mod the lattice): u is regular there with
        a double zero of u - a."""
        return Jet(self.a, 0j, -2 * self.b, 0j)

    def __call__(self, z) -> complex:
        return self.jet(z).f


@dataclass(frozen=True)
class WpRationalSolution:
    """Solutions rational in (p, p') for the three higher-power shapes.

    family II:  u = -3c / (c - 74088 p^3)                with (g2, g3) = (0, c/10584)
    family III: u = 9 (9p + L^2) p' / (2L (81p^2 - 9L^2 p + L^4)),
                L^6 = -27c/64,                           (g2, g3) = (0, c/432)
    family IV:  u = -(8p + L^2)^2 p' / (2L p (64p^2 + L^4)),
                c = 9L^4/4,                              (g2, g3) = (-c/36, 0)
    """

    family_kind: str
    c: complex
    invariants: WeierstrassInvariants
    scale: complex | None = None  # L; None for family II
    z0: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "c", require_finite(self.c, "c"))
        object.__setattr__(self, "z0", require_finite(self.z0, "z0"))
        if self.c == 0:
            raise ValueError("c must be nonzero")
        if self.family_kind not in (FAMILY_II, FAMILY_III, FAMILY_IV):
            raise ValueError(f"unknown family {self.family_kind!r}")
        g2, g3 = self.invariants.g2, self.invariants.g3
        if self.family_kind == FAMILY_II:
            expected = (0j, self.c / 10584)
        elif self.family_kind == FAMILY_III:
            expected = (0j, self.c / 432)
        else:
            expected = (-self.c / 36, 0j)
        for got, want, name in ((g2, expected[0], "g2"), (g3, expected[1], "g3")):
            if abs(got - want) > _INV_TOL * max(1.0, abs(want)):
                raise ValueError(
                    f"{name} = {got!r} inconsistent with family "
                    f"{self.family_kind} (expected {want!r})"
                )
        if self.family_kind == FAMILY_II:
            if self.scale is not None:
                raise ValueError("family II takes no scale parameter")
        else:
            if self.scale is None or self.scale == 0:
                raise ValueError(f"family {self.family_kind} needs a nonzero scale L")
            power, target = (6, -27 * self.c / 64) if self.family_kind == FAMILY_III \
                else (4, 4 * self.c / 9)
            if abs(self.scale ** power - target) > _INV_TOL * max(1.0, abs(target)):
                raise ValueError(
                    f"L^{power} = {self.scale ** power!r} inconsistent with c = {self.c!r}"
                )

    @property
    def family(self) -> str:
        return f"wp-rational-{self.family_kind}"

    def jet(self, z) -> Jet:
        w = require_finite(z, "z") - self.z0
        inv = self.invariants
        if self.family_kind == FAMILY_II:
            try:
                p_jet = wp_jet(w, inv)
            except PoleProximityError as exc:
                # u has a sixth-order zero at lattice points
                raise PoleProximityError(str(exc), limit_value=Jet.constant(0)) from None
            return _jet_guarding_poles(
                lambda _: (-3 * self.c) * (Jet.constant(self.c)
                                           - 74088 * p_jet ** 3).reciprocal(),
                z, "u",
            )
        p_jet = wp_jet(w, inv)
        dp_jet = wp_prime_jet(w, inv)
        ell = self.scale
        if self.family_kind == FAMILY_III:
            num = 9 * (9 * p_jet + ell * ell) * dp_jet
            den = 2 * ell * (81 * p_jet * p_jet - 9 * ell * ell * p_jet + ell ** 4)
        else:
            num = -(8 * p_jet + ell * ell) ** 2 * dp_jet
            den = 2 * ell * p_jet * (64 * p_jet * p_jet + ell ** 4)
        return _jet_guarding_poles(lambda _: num / den, z, "u")

    def __call__(self, z) -> complex:
        return self.jet(z).f


@dataclass(frozen=True)
class TrigSolution:
    """u(z) = outer(sin(alpha z + beta))."""

    alpha: complex
    beta: complex = 0j
    outer: MobiusTransform = field(default_factory=MobiusTransform.identity)

    def __post_init__(self):
        object.__setattr__(self, "alpha", require_finite(self.alpha, "alpha"))
        object.__setattr__(self, "beta", require_finite(self.beta, "beta"))
        if self.alpha == 0:
            raise ValueError("alpha must be nonzero")

    @property
    def family(self) -> str:
        return "trig"

    def jet(self, z) -> Jet:
        z = require_finite(z, "z")
        base = sin_jet(self.alpha * z + self.beta)
        chained = Jet(
            base.f,
            base.f1 * self.alpha,
            base.f2 * self.alpha ** 2,
            base.f3 * self.alpha ** 3,
        )
        return _jet_guarding_poles(lambda _: mobius_jet(self.outer, chained), z, "u")

    def __call__(self, z) -> complex:
        return self.jet(z).f


@dataclass(frozen=True)
class ExpSolution:
    """u(z) = outer(exp(alpha z))."""

    alpha: complex
    outer: MobiusTransform = field(default_factory=MobiusTransform.identity)

    def __post_init__(self):
        object.__setattr__(self, "alpha", require_finite(self.alpha, "alpha"))
        if self.alpha == 0:
            raise ValueError("alpha must be nonzero (solution would be constant)")

    @property
    def family(self) -> str:
        return "exp"

    def jet(self, z) -> Jet:
        z = require_finite(z, "z")
        base = exp_jet(self.alpha * z)
        chained = Jet(
            base.f,
            base.f1 * self.alpha,
            base.f2 * self.alpha ** 2,
            base.f3 * self.alpha ** 3,
        )
        return _jet_guarding_poles(lambda _: mobius_jet(self.outer, chained), z, "u")

    def __call__(self, z) -> complex:
        return self.jet(z).f


Solution = (
    EllipticFractionalSolution | WpRationalSolution | TrigSolution | ExpSolution
)


def solution_jet(solution, z) -> Jet:
    """Exact third-order jet of any solution family at z."""
    return solution.jet(z)
