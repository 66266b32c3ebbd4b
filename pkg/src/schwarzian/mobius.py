"""Mobius transformations z -> (az+b)/(cz+d) on the extended complex plane.

Transforms are normalized to determinant 1 at construction (principal
square root), so two transforms represent the same map iff their
coefficient quadruples agree up to a global sign.
"""

from __future__ import annotations

import cmath

from .extended import INF, is_inf, require_finite

DET_TOL = 1e-12
EQ_TOL = 1e-10


class MobiusTransform:
    """An invertible map of the Riemann sphere, stored as a det-1 matrix."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        a = require_finite(a, "a")
        b = require_finite(b, "b")
        c = require_finite(c, "c")
        d = require_finite(d, "d")
        det = a * d - b * c
        if abs(det) <= DET_TOL * max(abs(a * d), abs(b * c), 1.0):
            raise ValueError(f"degenerate transform: ad - bc = {det!r}")
        s = 1.0 / cmath.sqrt(det)
        self.a = a * s
        self.b = b * s
        self.c = c * s
        self.d = d * s

    @classmethod
    def identity(cls) -> "MobiusTransform":
        return cls(1, 0, 0, 1)

    @classmethod
    def inversion(cls) -> "MobiusTransform":
        """z -> 1/z."""
        return cls(0, 1, 1, 0)

    def __call__(self, z):
        """Apply the map; total on the extended plane."""
        if is_inf(z):
            if self.c == 0:
                return INF
            return self.a / self.c
        z = complex(z)
        den = self.c * z + self.d
        if den == 0:
            return INF
        return (self.a * z + self.b) / den

    apply = __call__

    def compose(self, other: "MobiusTransform") -> "MobiusTransform":
        """Matrix product: (self.compose(other))(z) == self(other(z))."""
        return MobiusTransform(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    __matmul__ = compose

    def inverse(self) -> "MobiusTransform":
        return MobiusTransform(self.d, -self.b, -self.c, self.a)

    def coefficients(self) -> tuple[complex, complex, complex, complex]:
        return (self.a, self.b, self.c, self.d)

    def is_identity(self) -> bool:
        return self == MobiusTransform.identity()

    def __eq__(self, other):
        if not isinstance(other, MobiusTransform):
            return NotImplemented
        same = max(
            abs(self.a - other.a), abs(self.b - other.b),
            abs(self.c - other.c), abs(self.d - other.d),
        )
        flip = max(
            abs(self.a + other.a), abs(self.b + other.b),
            abs(self.c + other.c), abs(self.d + other.d),
        )
        return min(same, flip) <= EQ_TOL

    def __hash__(self):  # equality is tolerance-based; hash by class only
        return hash(MobiusTransform)

    def __repr__(self):
        return (f"MobiusTransform(a={self.a!r}, b={self.b!r}, "
                f"c={self.c!r}, d={self.d!r})")


def random_transform(rng) -> MobiusTransform:
    """Draw a well-conditioned random transform (for property tests)."""
    while True:
        vals = rng.uniform(-2.0, 2.0, size=8)
        a, b, c, d = (complex(vals[2 * k], vals[2 * k + 1]) for k in range(4))
        if abs(a * d - b * c) > 0.2:
            return MobiusTransform(a, b, c, d)
