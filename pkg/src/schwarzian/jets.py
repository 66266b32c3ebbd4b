"""Third-order jets (f, f', f'', f''') and Schwarzian-derivative evaluation.

The Schwarzian derivative of an analytic function is

    S(f, z) = f'''/f' - (3/2) (f''/f')^2,

computed here either from an exact jet (chain rule through closed-form
solution families) or numerically for an arbitrary analytic callable via
Cauchy-ring sampling, which recovers derivatives with spectral accuracy.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import CriticalPointError, SingularityInDiskError
from .extended import is_finite, require_finite
from .mobius import MobiusTransform

JET_CRITICAL_TOL = 1e-10
DEFAULT_RING_RADIUS = 0.3
DEFAULT_RING_SAMPLES = 64


@dataclass(frozen=True)
class Jet:
    """Value and first three derivatives of an analytic function at a point.

    Arithmetic follows the product/quotient rules truncated at order 3, so
    composite expressions built from jets carry exact derivatives.
    """

    f: complex
    f1: complex
    f2: complex
    f3: complex

    @classmethod
    def constant(cls, value) -> "Jet":
        return cls(complex(value), 0j, 0j, 0j)

    @classmethod
    def variable(cls, value) -> "Jet":
        """The identity function's jet at ``value``."""
        return cls(complex(value), 1.0 + 0j, 0j, 0j)

    def _coerce(self, other) -> "Jet":
        return other if isinstance(other, Jet) else Jet.constant(other)

    def __add__(self, other):
        o = self._coerce(other)
        return Jet(self.f + o.f, self.f1 + o.f1, self.f2 + o.f2, self.f3 + o.f3)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.f, -self.f1, -self.f2, -self.f3)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet):
            w = complex(other)
            return Jet(self.f * w, self.f1 * w, self.f2 * w, self.f3 * w)
        a, b = self, other
        return Jet(
            a.f * b.f,
            a.f1 * b.f + a.f * b.f1,
            a.f2 * b.f + 2 * a.f1 * b.f1 + a.f * b.f2,
            a.f3 * b.f + 3 * a.f2 * b.f1 + 3 * a.f1 * b.f2 + a.f * b.f3,
        )

    __rmul__ = __mul__

    def reciprocal(self) -> "Jet":
        g, g1, g2, g3 = self.f, self.f1, self.f2, self.f3
        inv = 1.0 / g  # raises ZeroDivisionError at poles; callers translate
        inv2 = inv * inv
        return Jet(
            inv,
            -g1 * inv2,
            (2 * g1 * g1 * inv - g2) * inv2,
            (-g3 + 6 * g1 * g2 * inv - 6 * g1 ** 3 * inv2) * inv2,
        )

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            return self * (1.0 / complex(other))
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("jet powers must be nonnegative integers")
        out = Jet.constant(1.0)
        base = self
        k = n
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def as_tuple(self) -> tuple[complex, complex, complex, complex]:
        return (self.f, self.f1, self.f2, self.f3)


def schwarzian_of_jet(jet: Jet) -> complex:
    """S(f) from a jet; rejects near-critical points where S has a pole."""
    if abs(jet.f1) <= JET_CRITICAL_TOL * max(1.0, abs(jet.f)):
        raise CriticalPointError(
            f"|f'| = {abs(jet.f1):.3e} is below the critical-point tolerance"
        )
    ratio = jet.f2 / jet.f1
    return jet.f3 / jet.f1 - 1.5 * ratio * ratio


def ring_derivatives(f, z0, radius: float, samples: int) -> Jet:
    """Jet of an analytic callable from equispaced samples on a circle.

    f^(k)(z0) = k! r^-k * (1/N) sum_j f(z0 + r e^{i theta_j}) e^{-ik theta_j};
    the truncation error decays geometrically in N while the closed disk
    stays free of singularities.
    """
    z0 = require_finite(z0, "z0")
    if not (radius > 0 and math.isfinite(radius)):
        raise ValueError(f"radius must be positive and finite, got {radius!r}")
    if samples < 16 or samples & (samples - 1):
        raise ValueError(f"samples must be a power of two >= 16, got {samples}")
    theta = 2.0 * np.pi * np.arange(samples) / samples
    nodes = [complex(w) for w in z0 + radius * np.exp(1j * theta)]
    try:
        values = np.asarray([complex(f(z)) for z in nodes])
    except (ZeroDivisionError, OverflowError) as exc:
        raise SingularityInDiskError(
            f"singular sample on the ring of radius {radius} about {z0!r}"
        ) from exc
    if not np.all(np.isfinite(values.real) & np.isfinite(values.imag)):
        raise SingularityInDiskError(
            f"non-finite sample on the ring of radius {radius} about {z0!r}"
        )
    coeffs = np.fft.fft(values) / samples
    center = complex(f(z0))
    if not is_finite(center):
        raise SingularityInDiskError(f"f is singular at the center {z0!r}")
    return Jet(
        center,
        complex(coeffs[1]) / radius,
        2.0 * complex(coeffs[2]) / radius ** 2,
        6.0 * complex(coeffs[3]) / radius ** 3,
    )


def schwarzian_numeric(
    f,
    z0,
    radius: float = DEFAULT_RING_RADIUS,
    samples: int = DEFAULT_RING_SAMPLES,
) -> complex:
    """Schwarzian of an analytic callable at z0 via ring differentiation."""
    return schwarzian_of_jet(ring_derivatives(f, z0, radius, samples))


def mobius_jet(m: MobiusTransform, jet: Jet) -> Jet:
    """Jet of m(f) given the jet of f (post-composition with a Mobius map)."""
    num = m.a * jet + Jet.constant(m.b)
    den = m.c * jet + Jet.constant(m.d)
    return num / den


def sin_jet(w) -> Jet:
    s, c = cmath.sin(w), cmath.cos(w)
    return Jet(s, c, -s, -c)


def exp_jet(w) -> Jet:
    e = cmath.exp(w)
    return Jet(e, e, e, e)
