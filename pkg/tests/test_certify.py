"""Residual certification harness: reports, determinism, exclusions."""

import pytest

from schwarzian import (
    EllipticFractionalSolution,
    ExpSolution,
    Polynomial,
    RationalFunction,
    WeierstrassInvariants,
    certify_solution,
)

EXP_EQ = RationalFunction(Polynomial((-0.5,)), Polynomial.one())


def test_report_fields_and_pass():
    sol = ExpSolution(alpha=1.0)
    report = certify_solution(sol, 1, EXP_EQ, samples=40, tolerance=1e-10, seed=3)
    assert report.sample_count == 40
    assert report.passed
    assert report.max_rel_residual <= 1e-10
    assert report.max_abs_residual >= 0
    assert report.tolerance == 1e-10


def test_report_detects_wrong_solution():
    wrong = ExpSolution(alpha=1.1)  # solves S = -1.21/2, not -1/2
    report = certify_solution(wrong, 1, EXP_EQ, samples=40, seed=3)
    assert not report.passed
    assert report.max_rel_residual > 1e-3


def test_determinism_same_seed():
    sol = EllipticFractionalSolution(
        a=0, b=-1, d=1, invariants=WeierstrassInvariants(16, 0)
    )
    eq = RationalFunction(
        Polynomial((0.5, 2, 7, 10, 12.5)), Polynomial.from_roots((0, 1, -1, -1 / 3))
    )
    one = certify_solution(sol, 1, eq, samples=50, seed=11)
    two = certify_solution(sol, 1, eq, samples=50, seed=11)
    assert one == two
    other = certify_solution(sol, 1, eq, samples=50, seed=12)
    assert other.worst_point != one.worst_point


def test_inadmissible_points_are_excluded():
    from schwarzian.certify import residual_at
    from schwarzian import half_periods

    sol = EllipticFractionalSolution(
        a=0, b=-1, d=1, invariants=WeierstrassInvariants(16, 0)
    )
    eq = RationalFunction(
        Polynomial((0.5, 2, 7, 10, 12.5)), Polynomial.from_roots((0, 1, -1, -1 / 3))
    )
    # lattice point: pole of p (u regular but u' = 0 there)
    assert residual_at(sol, 1, eq, 0j) is None
    # half-period: u' = 0, the Schwarzian has a pole
    omega1 = half_periods(WeierstrassInvariants(16, 0)).omega1
    assert residual_at(sol, 1, eq, omega1) is None
    # generic point is admissible
    assert residual_at(sol, 1, eq, 0.37 + 0.21j) is not None
    report = certify_solution(sol, 1, eq, samples=200, seed=42)
    assert report.sample_count == 200
    assert report.excluded_points >= 0


def test_invalid_sample_count():
    with pytest.raises(ValueError):
        certify_solution(ExpSolution(alpha=1.0), 1, EXP_EQ, samples=0)
