"""Mobius transform algebra on the extended plane."""

import numpy as np
import pytest

from schwarzian import INF, MobiusTransform, is_inf, schwarzian_numeric
from schwarzian.mobius import random_transform

RNG_SEED = 7


def test_construction_rejects_degenerate():
    with pytest.raises(ValueError):
        MobiusTransform(1, 2, 2, 4)
    with pytest.raises(ValueError):
        MobiusTransform(0, 0, 0, 1)


def test_determinant_normalized_to_one():
    m = MobiusTransform(3, 1, 2, 5)
    assert m.a * m.d - m.b * m.c == pytest.approx(1.0)


def test_apply_identity_and_special_points():
    ident = MobiusTransform.identity()
    assert ident(3 + 4j) == 3 + 4j
    inversion = MobiusTransform.inversion()
    assert inversion(INF) == 0
    assert is_inf(inversion(0))
    m = MobiusTransform(1, 2, 3, 4)
    assert m(INF) == pytest.approx(1 / 3)
    assert is_inf(m(-4 / 3))


def test_compose_examples():
    m = MobiusTransform(2, 1 - 1j, 0.5j, 3)
    ident = MobiusTransform.identity()
    assert m.compose(ident) == m
    inv = MobiusTransform.inversion()
    assert inv.compose(inv) == ident
    left = MobiusTransform(1, 1, 0, 1)
    right = MobiusTransform(1, 0, 1, 1)
    assert left.compose(right) == MobiusTransform(2, 1, 1, 1)


def test_inverse_examples():
    ident = MobiusTransform.identity()
    assert ident.inverse() == ident
    m = MobiusTransform(1, 2, 3, 4)
    assert m.inverse() == MobiusTransform(4, -2, -3, 1)  # adjugate
    assert m.compose(m.inverse()) == ident


def test_group_laws_pointwise():
    rng = np.random.default_rng(RNG_SEED)
    maps = [random_transform(rng) for _ in range(6)]
    points = [complex(*rng.uniform(-2, 2, size=2)) for _ in range(20)]
    for g in maps:
        for h in maps:
            gh = g.compose(h)
            for z in points:
                via_compose = gh(z)
                stepwise = g(h(z))
                if is_inf(via_compose) or is_inf(stepwise):
                    continue
                assert abs(via_compose - stepwise) <= 1e-10 * max(1.0, abs(stepwise))
    for g in maps:
        ginv = g.inverse()
        for z in points:
            back = ginv(g(z))
            if is_inf(back):
                continue
            assert abs(back - z) <= 1e-10 * max(1.0, abs(z))
    # associativity
    f, g, h = maps[:3]
    for z in points:
        one = f.compose(g).compose(h)(z)
        two = f.compose(g.compose(h))(z)
        if is_inf(one) or is_inf(two):
            continue
        assert abs(one - two) <= 1e-10 * max(1.0, abs(two))


def test_equality_up_to_scale():
    m = MobiusTransform(1, 2, 3, 4)
    assert m == MobiusTransform(-2, -4, -6, -8)
    assert m != MobiusTransform(1, 2, 3, 4.5)


def test_schwarzian_annihilates_mobius_maps():
    rng = np.random.default_rng(RNG_SEED)
    for _ in range(10):
        gamma = random_transform(rng)
        pole = None if gamma.c == 0 else -gamma.d / gamma.c
        checked = 0
        while checked < 20:
            z0 = complex(*rng.uniform(-2, 2, size=2))
            if pole is not None and abs(z0 - pole) < 0.5:
                continue
            radius = 0.25 if pole is None else min(0.25, abs(z0 - pole) / 2)
            assert abs(schwarzian_numeric(gamma, z0, radius=radius)) <= 1e-8
            checked += 1


def test_rejects_nonfinite_coefficients():
    with pytest.raises(ValueError):
        MobiusTransform(float("nan"), 0, 0, 1)
