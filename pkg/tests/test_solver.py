"""Solution constructors: parameter relations, rejection, companion equations."""

import cmath

import numpy as np
import pytest

from schwarzian import (
    CanonicalForm,
    EllipticFractionalSolution,
    NoSolution,
    NoTranscendentalSolutionError,
    Polynomial,
    RationalFunction,
    SchwarzianEquation,
    SubequationSpec,
    TrigSolution,
    TypeICoefficients,
    Unresolved,
    WeierstrassInvariants,
    certify_solution,
    fit_subequation_scale,
    generate_type1,
    q_factor,
    schwarzian_of_jet,
    solve_equation,
    solve_type1,
    solve_type2,
    solve_type3,
    solve_type4,
    solve_type5,
    solve_type6,
    subequation_residual,
    wp_with_prime,
)
from schwarzian.solver import type1_subequation

RNG_SEED = 4242

TAU_EXAMPLE = (0, 1, -1, -1 / 3)
R_EXAMPLE_1 = (0.5, 2, 7, 10, 12.5)
SQRT5I = cmath.sqrt(5) * 1j
SIGMA_III = 1j / cmath.sqrt(3)


def test_coefficients_validation():
    with pytest.raises(ValueError):
        TypeICoefficients(r=(0, 0, 0, 0, 0), tau=TAU_EXAMPLE)
    with pytest.raises(ValueError):
        TypeICoefficients(r=R_EXAMPLE_1, tau=(0, 0, 1, 2))
    with pytest.raises(ValueError):
        TypeICoefficients(r=(1, 2, 3), tau=TAU_EXAMPLE)


def test_generate_worked_example_parameters():
    coeffs, sol = generate_type1(TAU_EXAMPLE, 1, -1)
    assert coeffs.r == pytest.approx(R_EXAMPLE_1)
    assert sol.a == 0
    assert sol.d == pytest.approx(1)
    assert sol.invariants.g2 == pytest.approx(16)
    assert sol.invariants.g3 == pytest.approx(0, abs=1e-12)


def test_generate_second_example_parameters():
    coeffs, sol = generate_type1(TAU_EXAMPLE, 2, 16)
    assert coeffs.r == pytest.approx((1, 4, 14, 20, 25))
    assert (sol.a, sol.d) == (1, pytest.approx(-12))
    assert sol.invariants.g2 == pytest.approx(64)
    assert sol.invariants.g3 == pytest.approx(0, abs=1e-12)


def test_generate_scaling_in_b():
    rng = np.random.default_rng(RNG_SEED)
    tau = tuple(complex(*rng.uniform(-2, 2, size=2)) for _ in range(4))
    b = 0.7 - 0.4j
    c1, s1 = generate_type1(tau, 3, b)
    c2, s2 = generate_type1(tau, 3, 2 * b)
    for one, two in zip(c1.r, c2.r):
        assert two == pytest.approx(2 * one, rel=1e-12)
    assert s2.invariants.g2 == pytest.approx(4 * s1.invariants.g2, rel=1e-12)
    assert s2.invariants.g3 == pytest.approx(8 * s1.invariants.g3, rel=1e-12)
    assert s2.d == pytest.approx(2 * s1.d, rel=1e-12)


def test_generate_rejects_bad_inputs():
    with pytest.raises(ValueError):
        generate_type1(TAU_EXAMPLE, 1, 0)
    with pytest.raises(ValueError):
        generate_type1((0, 0, 1, 2), 1, 1)


def test_solve_type1_worked_example():
    sol = solve_type1(TypeICoefficients(r=R_EXAMPLE_1, tau=TAU_EXAMPLE), anchor=0)
    assert isinstance(sol, EllipticFractionalSolution)
    assert sol.a == 0
    assert sol.b == pytest.approx(-1)
    assert sol.d == pytest.approx(1)
    assert sol.invariants.g2 == pytest.approx(16)


def test_solve_type1_branches_share_invariants():
    coeffs = TypeICoefficients(r=R_EXAMPLE_1, tau=TAU_EXAMPLE)
    sols = [solve_type1(coeffs, anchor=t) for t in TAU_EXAMPLE]
    for sol, anchor in zip(sols, TAU_EXAMPLE):
        assert isinstance(sol, EllipticFractionalSolution)
        assert sol.a == pytest.approx(anchor)
        assert sol.invariants.g2 == pytest.approx(16)
        assert sol.invariants.g3 == pytest.approx(0, abs=1e-10)
    # b scales with q_i across branches
    ratio = sols[0].b / q_factor(TAU_EXAMPLE, 1)
    for k, sol in enumerate(sols[1:], start=2):
        assert sol.b == pytest.approx(ratio * q_factor(TAU_EXAMPLE, k), rel=1e-9)


def test_solve_type1_rejects_perturbations():
    for j in range(5):
        r = list(R_EXAMPLE_1)
        r[j] += 1e-3
        outcome = solve_type1(TypeICoefficients(r=tuple(r), tau=TAU_EXAMPLE))
        assert isinstance(outcome, NoSolution)
        assert outcome.diagnostics


def test_solve_type1_unknown_anchor():
    outcome = solve_type1(
        TypeICoefficients(r=R_EXAMPLE_1, tau=TAU_EXAMPLE), anchor=7.0
    )
    assert isinstance(outcome, NoSolution)


def test_roundtrip_property():
    rng = np.random.default_rng(RNG_SEED)
    for _ in range(30):
        while True:
            tau = tuple(complex(*rng.uniform(-2, 2, size=2)) for _ in range(4))
            if min(abs(tau[i] - tau[j]) for i in range(4) for j in range(i + 1, 4)) > 0.2:
                break
        i = int(rng.integers(1, 5))
        b = complex(*rng.uniform(0.3, 1.5, size=2))
        coeffs, generated = generate_type1(tau, i, b)
        solved = solve_type1(coeffs, anchor=tau[i - 1])
        assert isinstance(solved, EllipticFractionalSolution)
        assert solved.b == pytest.approx(generated.b, rel=1e-9)
        assert solved.d == pytest.approx(generated.d, rel=1e-9, abs=1e-9)
        assert solved.invariants.g2 == pytest.approx(generated.invariants.g2, rel=1e-9, abs=1e-9)
        assert solved.invariants.g3 == pytest.approx(generated.invariants.g3, rel=1e-9, abs=1e-9)


def test_type1_poles_are_simple():
    # find a pole of u (where p = d) by Newton iteration, then check the
    # Laurent behavior (z - pole) * u(z) -> -b / p'(pole), finite nonzero
    sol = solve_type1(TypeICoefficients(r=R_EXAMPLE_1, tau=TAU_EXAMPLE), anchor=0)
    inv = sol.invariants
    z = 0.9 + 0.4j
    for _ in range(60):
        p, dp = wp_with_prime(z, inv)
        step = (p - sol.d) / dp
        z = z - step
        if abs(step) < 1e-14:
            break
    p, dp = wp_with_prime(z, inv)
    assert abs(p - sol.d) < 1e-10
    expected = -sol.b / dp
    assert abs(expected) > 1e-6
    for delta in (1e-4, 1e-4j, -1e-4, (1 + 1j) * 7e-5):
        probe = z + delta
        value = (probe - z) * sol(probe)
        assert value == pytest.approx(expected, rel=1e-3)


def test_z0_freedom():
    coeffs, _ = generate_type1(TAU_EXAMPLE, 1, -1)
    eq = coeffs.equation()
    for z0 in (0j, 0.7 - 0.2j, -1.1 + 0.9j):
        sol = EllipticFractionalSolution(
            a=0, b=-1, d=1, invariants=WeierstrassInvariants(16, 0), z0=z0
        )
        report = certify_solution(sol, 1, eq.rational, samples=60, seed=5)
        assert report.passed


def test_solve_type2_accepts_and_rejects():
    sol = solve_type2(10584.0, (SQRT5I, -SQRT5I))
    assert sol.invariants.g2 == 0
    assert sol.invariants.g3 == pytest.approx(1.0)
    assert isinstance(solve_type2(10584.0, (1.0, 2.0)), NoSolution)
    assert isinstance(solve_type2(10584.0, (2j, -2j)), NoSolution)


def test_type2_value_at_wp_zero():
    # u = -3c/(c - 74088 p^3) equals -3 wherever p vanishes
    c = 10584.0
    sol = solve_type2(c, (SQRT5I, -SQRT5I))
    inv = sol.invariants
    z = 0.8 + 0.5j  # Newton for p(z) = 0
    for _ in range(60):
        p, dp = wp_with_prime(z, inv)
        z = z - p / dp
        if abs(p) < 1e-13:
            break
    assert abs(wp_with_prime(z, inv)[0]) < 1e-10
    assert sol(z) == pytest.approx(-3.0, rel=1e-8)


def test_solve_type3_accepts_and_rejects():
    c = -64.0 / 27.0
    sol = solve_type3(c, (SIGMA_III, -SIGMA_III))
    assert sol.scale == pytest.approx(1.0)
    assert sol.invariants.g3 == pytest.approx(c / 432)
    assert isinstance(solve_type3(c, (1j, -1j)), NoSolution)


def test_solve_type3_branch_rotation():
    c = -64.0 / 27.0
    sol = solve_type3(c, (SIGMA_III, -SIGMA_III), branch=1)
    assert sol.scale == pytest.approx(cmath.exp(2j * cmath.pi / 6))


def test_solve_type4_accepts_and_rejects():
    sol = solve_type4(9 / 4, (0.5j, -0.5j))
    assert sol.scale == pytest.approx(1.0)
    assert sol.invariants.g2 == pytest.approx(-1 / 16)
    assert sol.invariants.g3 == 0
    assert isinstance(solve_type4(9 / 4, (1j, -1j)), NoSolution)


def test_solve_type5_sine_and_unresolved():
    form = CanonicalForm(
        kind="V", c=0.5, sigma=(cmath.sqrt(2) * 1j, -cmath.sqrt(2) * 1j),
        tau=(1, -1), p=1,
    )
    sol = solve_type5(0.5, form)
    assert isinstance(sol, TrigSolution)
    assert sol.alpha == pytest.approx(1.0)
    assert sol(0.3) == pytest.approx(cmath.sin(0.3))
    # alpha = sqrt(2c) with the admissible sigma pair
    form2 = CanonicalForm(
        kind="V", c=2.0, sigma=(cmath.sqrt(2) * 1j, -cmath.sqrt(2) * 1j),
        tau=(1, -1), p=1,
    )
    assert solve_type5(2.0, form2).alpha == pytest.approx(2.0)
    # wrong sigma magnitude: existence is an open question, not a refusal
    form3 = CanonicalForm(kind="V", c=2.0, sigma=(2j, -2j), tau=(1, -1), p=1)
    outcome = solve_type5(2.0, form3)
    assert isinstance(outcome, Unresolved)
    assert "open" in outcome.reason


def test_solve_type5_affine_normalization():
    # tau = (3, 1): affine map w -> w + 2 carries {1, -1} onto it; sigma
    # must shift along for the sine pattern to match.
    center, half_span = 2.0, 1.0
    sigma = (center + half_span * cmath.sqrt(2) * 1j,
             center - half_span * cmath.sqrt(2) * 1j)
    form = CanonicalForm(kind="V", c=0.5, sigma=sigma, tau=(3, 1), p=1)
    sol = solve_type5(0.5, form)
    assert isinstance(sol, TrigSolution)
    assert sol(0.4) == pytest.approx(cmath.sin(0.4) + 2.0)
    # verified against the un-normalized equation directly
    num = Polynomial.from_roots(sigma, leading=0.5)
    den = Polynomial.from_roots((3, 1))
    report = certify_solution(sol, 1, RationalFunction(num, den), samples=50)
    assert report.passed


def test_solve_type6_alpha_values():
    assert solve_type6(-0.5, 1).alpha == pytest.approx(1.0)
    assert solve_type6(-2.0, 1).alpha == pytest.approx(2.0)
    sol = solve_type6(0.25, 2)
    assert sol.alpha == pytest.approx(cmath.sqrt(-2) * 0.25 ** 0.25)
    jet = sol.jet(0.37 - 0.6j)
    assert schwarzian_of_jet(jet) ** 2 == pytest.approx(0.25, rel=1e-10)
    with pytest.raises(NoTranscendentalSolutionError):
        solve_type6(0, 1)


def test_solve_equation_dispatch():
    # kind VI document: S^1 = 5
    eq = SchwarzianEquation(1, RationalFunction(Polynomial((5,)), Polynomial.one()))
    form, outcome = solve_equation(eq)
    assert form.kind == "VI"
    assert outcome.alpha == pytest.approx(cmath.sqrt(-10))
    # non-canonical input
    eq = SchwarzianEquation(1, RationalFunction(Polynomial((1, 1)), Polynomial.one()))
    form, outcome = solve_equation(eq)
    assert isinstance(outcome, NoSolution)
    # kind II with non-normalized tau: reported, not solved
    num = Polynomial.from_roots([SQRT5I] * 3 + [-SQRT5I] * 3, leading=3.0)
    den = Polynomial.from_roots([5, 5, 5, -3, -3, 0])
    form, outcome = solve_equation(SchwarzianEquation(3, RationalFunction(num, den)))
    assert form.kind == "II"
    assert isinstance(outcome, NoSolution)
    assert "transform" in outcome.reason


def test_solve_equation_kind_ii_from_raw_polynomials():
    # classification must recover the triple/double/simple tau to solver
    # precision despite the multiple-root conditioning of the sextic
    c = 10584.0
    num = Polynomial.from_roots([SQRT5I] * 3 + [-SQRT5I] * 3, leading=c)
    den = Polynomial.from_roots([4, 4, 4, -3, -3, 0])
    form, outcome = solve_equation(SchwarzianEquation(3, RationalFunction(num, den)))
    assert form.kind == "II"
    assert form.tau == pytest.approx((4, -3, 0), abs=1e-10)
    assert not isinstance(outcome, (NoSolution, Unresolved))
    assert outcome.family == "wp-rational-II"
    assert outcome.invariants.g3 == pytest.approx(1.0)


def test_solve_equation_kind_iv_from_raw_polynomials():
    c = 9.0 / 4.0
    num = Polynomial.from_roots([0.5j, 0.5j, -0.5j, -0.5j], leading=c)
    den = Polynomial.from_roots([0, 0, 1, -1])
    form, outcome = solve_equation(SchwarzianEquation(2, RationalFunction(num, den)))
    assert form.kind == "IV"
    assert outcome.family == "wp-rational-IV"
    assert outcome.scale == pytest.approx(1.0)


def test_subequation_spec_validation():
    with pytest.raises(ValueError):
        SubequationSpec(n=2, K=0, factors=tuple((t, 1) for t in TAU_EXAMPLE))
    with pytest.raises(ValueError):
        SubequationSpec(n=5, K=1, factors=((0, 1),))
    with pytest.raises(ValueError):
        SubequationSpec(n=2, K=1, factors=((0, 2), (1, 1), (2, 1)))


def test_type1_subequation_closed_form_and_fit():
    coeffs = TypeICoefficients(r=R_EXAMPLE_1, tau=TAU_EXAMPLE)
    sol = solve_type1(coeffs, anchor=0)
    spec = type1_subequation(coeffs, sol)
    assert spec.K == pytest.approx(-12.0)  # -4b/q_i
    factors = tuple((t, 1) for t in TAU_EXAMPLE)
    fitted = fit_subequation_scale(sol, 2, factors, 0.31 + 0.43j)
    assert fitted == pytest.approx(spec.K, rel=1e-10)
    rng = np.random.default_rng(RNG_SEED)
    checked = 0
    while checked < 50:
        z = complex(*rng.uniform(-2, 2, size=2))
        try:
            res = subequation_residual(sol, spec, z)
        except Exception:
            continue
        if abs(sol(z)) > 1e3:
            continue
        assert abs(res) <= 1e-8 * max(1.0, abs(sol(z)) ** 4 * abs(spec.K))
        checked += 1


def test_sign_mutation_in_relations_breaks_roundtrip(monkeypatch):
    # flipping the sign of the r3 bracket must be caught by the solution's
    # own certification (the emitted coefficients no longer match u)
    import schwarzian.solver as solver_mod
    from schwarzian.errors import CertificationError

    original = solver_mod._relation_brackets

    def mutated(e1, e2, e3, e4):
        b0, b1, b2, b3, b4 = original(e1, e2, e3, e4)
        return (b0, b1, b2, -b3, b4)

    monkeypatch.setattr(solver_mod, "_relation_brackets", mutated)
    with pytest.raises(CertificationError):
        generate_type1(TAU_EXAMPLE, 1, -1)


def test_family2_subequation():
    c = 10584.0
    sol = solve_type2(c, (SQRT5I, -SQRT5I))
    factors = ((4.0 + 0j, 3), (-3.0 + 0j, 4), (0j, 5))
    scale = fit_subequation_scale(sol, 6, factors, 0.31 + 0.43j)
    spec = SubequationSpec(n=6, K=scale, factors=factors)
    rng = np.random.default_rng(RNG_SEED)
    checked = 0
    while checked < 50:
        z = complex(*rng.uniform(-2, 2, size=2))
        try:
            jet = sol.jet(z)
            res = subequation_residual(sol, spec, z)
        except Exception:
            continue
        rhs_scale = abs(spec.K) * max(1.0, abs(jet.f)) ** 12
        if rhs_scale > 1e10:
            continue
        assert abs(res) <= 1e-6 * max(1.0, rhs_scale)
        checked += 1
