"""The extended complex plane: finite values plus a point at infinity.

Finite points are ordinary Python ``complex`` numbers; the point at
infinity is the module-level singleton ``INF``.  Functions that are total
on the Riemann sphere (Mobius maps, rational-function evaluation) accept
and return either.
"""

from __future__ import annotations

import math


class _Infinity:
    """Singleton marker for the point at infinity."""

    __slots__ = ()

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return isinstance(other, _Infinity)

    def __hash__(self):
        return hash("schwarzian.INF")


INF = _Infinity()

ExtendedComplex = "complex | _Infinity"


def is_inf(value) -> bool:
    return isinstance(value, _Infinity)


def is_finite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


def require_finite(z, name: str = "argument") -> complex:
    """Coerce to complex and reject NaN/inf components."""
    z = complex(z)
    if not is_finite(z):
        raise ValueError(f"{name} must be a finite complex number, got {z!r}")
    return z
