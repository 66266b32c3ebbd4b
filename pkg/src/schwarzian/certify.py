"""Residual certification: does a candidate solution satisfy its equation?

Samples seeded pseudo-random points in a square, skips pole and
critical-point neighborhoods, and measures |S(u,z)^p - R(u(z))| relative
to max(1, |R(u(z))|).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CriticalPointError, PoleProximityError
from .extended import is_inf
from .jets import schwarzian_of_jet
from .polynomials import RationalFunction

DEFAULT_SAMPLES = 200
DEFAULT_TOLERANCE = 1e-6
DEFAULT_SEED = 42
DEFAULT_BOX = 2.0
# Values beyond this are too close to a blow-up for a double-precision
# residual to mean anything; such points count as excluded, not failed.
MAGNITUDE_GUARD = 1e8


@dataclass(frozen=True)
class ResidualReport:
    sample_count: int
    max_abs_residual: float
    max_rel_residual: float
    worst_point: complex
    excluded_points: int
    passed: bool
    tolerance: float


def sample_points(rng: np.random.Generator, box: float) -> complex:
    re, im = rng.uniform(-box, box, size=2)
    return complex(re, im)


def residual_at(solution, p: int, rational: RationalFunction, z):
    """(abs_residual, rel_residual) at z, or None if z must be excluded."""
    try:
        jet = solution.jet(z)
        s_val = schwarzian_of_jet(jet)
    except (PoleProximityError, CriticalPointError, ZeroDivisionError):
        return None
    rhs = rational(jet.f)
    if is_inf(rhs):
        return None
    lhs = s_val ** p
    if max(abs(lhs), abs(rhs), abs(jet.f)) > MAGNITUDE_GUARD:
        return None
    abs_res = abs(lhs - rhs)
    return abs_res, abs_res / max(1.0, abs(rhs))


def certify_solution(
    solution,
    p: int,
    rational: RationalFunction,
    samples: int = DEFAULT_SAMPLES,
    tolerance: float = DEFAULT_TOLERANCE,
    seed: int = DEFAULT_SEED,
    box: float = DEFAULT_BOX,
) -> ResidualReport:
    """Residual report over ``samples`` admissible points."""
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    rng = np.random.default_rng(seed)
    accepted = 0
    excluded = 0
    max_abs = 0.0
    max_rel = 0.0
    worst = 0j
    budget = 200 * samples
    for _ in range(budget):
        if accepted >= samples:
            break
        z = sample_points(rng, box)
        res = residual_at(solution, p, rational, z)
        if res is None:
            excluded += 1
            continue
        accepted += 1
        abs_res, rel_res = res
        if rel_res >= max_rel:
            max_rel = rel_res
            worst = z
        max_abs = max(max_abs, abs_res)
    if accepted < samples:
        raise RuntimeError(
            f"only {accepted}/{samples} admissible sample points found "
            f"within {budget} draws; the solution may be degenerate"
        )
    return ResidualReport(
        sample_count=accepted,
        max_abs_residual=max_abs,
        max_rel_residual=max_rel,
        worst_point=worst,
        excluded_points=excluded,
        passed=max_rel <= tolerance,
        tolerance=tolerance,
    )
