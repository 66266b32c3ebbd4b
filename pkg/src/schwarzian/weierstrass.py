"""Numerical engine for the Weierstrass elliptic function.

``wp`` evaluates p(z; g2, g3) by summing the Laurent series inside a
conservative radius and extending outward with the duplication formula

    p(2w) = p''(w)^2 / (4 p'(w)^2) - 2 p(w),      p'' = 6 p^2 - g2/2.

Half-periods come from the Carlson symmetric integral R_F applied to the
stationary values (the roots of 4t^3 - g2*t - g3).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DegenerateLatticeError, PoleProximityError
from .extended import INF, require_finite

EPS_DISCRIMINANT = 1e-10
EPS_POLE = 1e-6
SERIES_TERMS = 16
# Series radius 0.5/scale keeps |w| below ~0.2 of the shortest lattice
# vector for every torus, so the 16-term tail stays under 1e-14 while the
# halving depth for |z| <= 3/scale stays <= 8.
RADIUS_FACTOR = 0.5
RF_TOL = 1e-14


@dataclass(frozen=True)
class WeierstrassInvariants:
    """The pair (g2, g3) defining p via p'^2 = 4p^3 - g2*p - g3."""

    g2: complex
    g3: complex

    def __post_init__(self):
        object.__setattr__(self, "g2", require_finite(self.g2, "g2"))
        object.__setattr__(self, "g3", require_finite(self.g3, "g3"))

    @property
    def discriminant(self) -> complex:
        return self.g2 ** 3 - 27 * self.g3 ** 2

    @property
    def is_degenerate(self) -> bool:
        # The bound tracks the rounding error of g2^3 - 27 g3^2, so the
        # test is invariant under the lattice scaling (g2, g3) ->
        # (t^-4 g2, t^-6 g3); a constant floor would misflag small-scale
        # invariants whose lattice is merely large.
        bound = max(abs(self.g2) ** 3, abs(self.g3) ** 2)
        return abs(self.discriminant) <= EPS_DISCRIMINANT * bound

    def scale(self) -> float:
        """Inverse-length scale of the period lattice, ~2.5-3.8/|shortest period|."""
        return max(abs(self.g2) ** 0.25, abs(self.g3) ** (1.0 / 6.0))


@dataclass(frozen=True)
class LatticeData:
    """Half-periods omega1, omega3 (Im(omega3/omega1) > 0) and the
    stationary values e_i = p(omega_i)."""

    omega1: complex
    omega3: complex
    stationary_values: tuple[complex, complex, complex]


def laurent_coefficients(inv: WeierstrassInvariants, order: int) -> list[complex]:
    """Coefficients c_2..c_order of p(z) = z^-2 + sum_{k>=2} c_k z^(2k-2).

    c_2 = g2/20, c_3 = g3/28, and for k >= 4
    c_k = 3/((2k+1)(k-3)) * sum_{m=2}^{k-2} c_m c_{k-m}.
    """
    if order < 2:
        raise ValueError(f"order must be >= 2, got {order}")
    c = {2: complex(inv.g2) / 20.0, 3: complex(inv.g3) / 28.0}
    for k in range(4, order + 1):
        acc = sum(c[m] * c[k - m] for m in range(2, k - 1))
        c[k] = 3.0 * acc / ((2 * k + 1) * (k - 3))
    return [c[k] for k in range(2, order + 1)]


def _series_pair(z: complex, inv: WeierstrassInvariants) -> tuple[complex, complex]:
    """(p, p') from the truncated Laurent series; caller keeps |z| small."""
    cs = laurent_coefficients(inv, SERIES_TERMS + 1)
    z2 = z * z
    p = 0j
    dp = 0j
    for idx in range(len(cs) - 1, -1, -1):
        k = idx + 2
        p = p * z2 + cs[idx]
        dp = dp * z2 + (2 * k - 2) * cs[idx]
    p = p * z2 + 1.0 / z2
    dp = dp * z - 2.0 / (z2 * z)
    return p, dp


def _duplicate(x: complex, y: complex, g2: complex) -> tuple[complex, complex]:
    """(p, p') at 2w from (p, p') at w."""
    acc = 6 * x * x - g2 / 2            # p''(w)
    x2 = acc * acc / (4 * y * y) - 2 * x
    y2 = 3 * x * acc / y - acc ** 3 / (4 * y ** 3) - y
    return x2, y2


def wp_with_prime(z, inv: WeierstrassInvariants) -> tuple[complex, complex]:
    """(p(z), p'(z)); raises PoleProximityError within EPS_POLE of a pole."""
    z = require_finite(z, "z")
    if _pole_distance(z, inv) <= EPS_POLE:
        raise PoleProximityError(f"z = {z!r} is within {EPS_POLE} of a lattice point")
    s = inv.scale()
    if s == 0.0:
        return 1.0 / (z * z), -2.0 / (z * z * z)
    r0 = RADIUS_FACTOR / s
    halvings = 0
    w = z
    while abs(w) > r0:
        w /= 2
        halvings += 1
    x, y = _series_pair(w, inv)
    for _ in range(halvings):
        if y == 0:  # doubled argument fell exactly on a pole
            raise PoleProximityError(f"z = {z!r} differs from a pole by roundoff")
        x, y = _duplicate(x, y, inv.g2)
    return x, y


def wp(z, inv: WeierstrassInvariants):
    """p(z; g2, g3), or INF when z is within EPS_POLE of a lattice point."""
    try:
        return wp_with_prime(z, inv)[0]
    except PoleProximityError:
        return INF


def wp_prime(z, inv: WeierstrassInvariants):
    """p'(z; g2, g3), or INF near a lattice point."""
    try:
        return wp_with_prime(z, inv)[1]
    except PoleProximityError:
        return INF


def wp_second(z, inv: WeierstrassInvariants):
    """p''(z) = 6 p(z)^2 - g2/2, or INF near a lattice point."""
    p = wp(z, inv)
    if p is INF:
        return INF
    return 6 * p * p - inv.g2 / 2


def stationary_values(inv: WeierstrassInvariants) -> tuple[complex, complex, complex]:
    """The roots of 4t^3 - g2*t - g3, sorted by descending (Re, Im).

    Repeated roots (the degenerate case) are returned with repetition;
    check ``inv.is_degenerate`` to detect that situation.
    """
    # depressed cubic t^3 + p*t + q
    p = -inv.g2 / 4.0
    q = -inv.g3 / 4.0
    if p == 0 and q == 0:
        return (0j, 0j, 0j)
    root_disc = cmath.sqrt(q * q + 4.0 * p ** 3 / 27.0)
    w_plus = (-q + root_disc) / 2.0
    w_minus = (-q - root_disc) / 2.0
    w = w_plus if abs(w_plus) >= abs(w_minus) else w_minus
    u = cmath.exp(cmath.log(w) / 3.0)
    v = -p / (3.0 * u)
    omega = cmath.exp(2j * cmath.pi / 3.0)
    roots = [u + v, u * omega + v / omega, u / omega + v * omega]
    polished = [_polish_cubic_root(t, inv) for t in roots]
    polished.sort(key=lambda t: (-t.real, -t.imag))
    return tuple(polished)


def _polish_cubic_root(t: complex, inv: WeierstrassInvariants) -> complex:
    for _ in range(2):
        f = 4 * t ** 3 - inv.g2 * t - inv.g3
        df = 12 * t * t - inv.g2
        if abs(df) <= 1e-3 * max(abs(t) ** 2, 1.0):
            break  # near a multiple root; Newton would not help
        t = t - f / df
    return t


def carlson_rf(x, y, z, rtol: float = RF_TOL) -> complex:
    """Carlson's symmetric integral R_F(x,y,z) by the duplication iteration."""
    x, y, z = complex(x), complex(y), complex(z)
    a_mean = (x + y + z) / 3.0
    a0 = a_mean
    quit_bound = (3.0 * rtol) ** (-1.0 / 6.0) * max(
        abs(a0 - x), abs(a0 - y), abs(a0 - z)
    )
    pow4 = 1.0
    xm, ym, zm = x, y, z
    while pow4 * quit_bound >= abs(a_mean):
        sx, sy, sz = cmath.sqrt(xm), cmath.sqrt(ym), cmath.sqrt(zm)
        lam = sx * sy + sx * sz + sy * sz
        a_mean = (a_mean + lam) / 4.0
        xm = (xm + lam) / 4.0
        ym = (ym + lam) / 4.0
        zm = (zm + lam) / 4.0
        pow4 /= 4.0
    big_x = (a0 - x) * pow4 / a_mean
    big_y = (a0 - y) * pow4 / a_mean
    big_z = -big_x - big_y
    e2 = big_x * big_y - big_z * big_z
    e3 = big_x * big_y * big_z
    series = 1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0
    return series / cmath.sqrt(a_mean)


@lru_cache(maxsize=256)
def half_periods(inv: WeierstrassInvariants) -> LatticeData:
    """Half-periods from R_F: omega_a = R_F(0, e_a - e_b, e_a - e_c).

    omega1 pairs with the first stationary value in the deterministic
    (descending Re, then Im) order, omega3 with the last; the sign of
    omega3 is fixed so that Im(omega3/omega1) > 0.
    """
    if inv.is_degenerate:
        raise DegenerateLatticeError(
            f"discriminant {inv.discriminant!r} vanishes; no period lattice"
        )
    e1, e2, e3 = stationary_values(inv)
    omega1 = carlson_rf(0.0, e1 - e2, e1 - e3)
    omega3 = carlson_rf(0.0, e3 - e1, e3 - e2)
    ratio = omega3 / omega1
    if ratio.imag < 0:
        omega3 = -omega3
    return LatticeData(omega1=omega1, omega3=omega3, stationary_values=(e1, e2, e3))


def _reduce_basis(p1: complex, p2: complex) -> tuple[complex, complex]:
    """Lagrange-reduce a lattice basis (shortest vectors first)."""
    a, b = p1, p2
    for _ in range(64):
        if abs(a) > abs(b):
            a, b = b, a
        mu = round((b.real * a.real + b.imag * a.imag) / (abs(a) ** 2))
        if mu == 0:
            break
        b = b - mu * a
    return (a, b) if abs(a) <= abs(b) else (b, a)


def lattice_distance(z: complex, lattice: LatticeData) -> float:
    """Euclidean distance from z to the period lattice 2m*omega1 + 2n*omega3."""
    w1, w2 = _reduce_basis(2 * lattice.omega1, 2 * lattice.omega3)
    det = w1.real * w2.imag - w1.imag * w2.real
    s = (z.real * w2.imag - z.imag * w2.real) / det
    t = (w1.real * z.imag - w1.imag * z.real) / det
    best = abs(z)
    for m in (math.floor(s), math.floor(s) + 1):
        for n in (math.floor(t), math.floor(t) + 1):
            best = min(best, abs(z - m * w1 - n * w2))
    return best


@lru_cache(maxsize=256)
def _lattice_or_none(inv: WeierstrassInvariants):
    try:
        return half_periods(inv)
    except DegenerateLatticeError:
        return None


def _pole_distance(z: complex, inv: WeierstrassInvariants) -> float:
    """Distance to the nearest pole; falls back to |z| when the lattice
    degenerates (only the origin is then known a priori)."""
    lattice = _lattice_or_none(inv)
    if lattice is None:
        return abs(z)
    return lattice_distance(z, lattice)
