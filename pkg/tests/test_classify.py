from __future__ import annotations

import random

import pytest

from taftquiver.action import REFLECTION, ROTATION, ActionSpec, verify_hopf_relations
from taftquiver.classify import (
    ReflectionParams,
    RotationParams,
    build_n4d2,
    build_reflection,
    build_rotation,
    check_necessary,
    enumerate_actions,
    fixed_vertices,
    rotation_c_closed,
    rotation_c_recurrence,
    rotation_sigma_cmu,
    swapped_vertices,
)
from taftquiver.errors import BudgetExceeded, SquareRootNotInField
from taftquiver.quiver import Arrow
from taftquiver.scalars import CycNum, RootOfUnity, zeta


def _random_unit(rng, L):
    return zeta(L, rng.randrange(L)) * rng.choice([1, 2, -3])


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_closed_forms_match_recurrences(n):
    rng = random.Random(n)
    L = 12
    for _ in range(20):
        for d in {1, 2, n - 2, n - 1} - {0}:
            lam = zeta(L, rng.randrange(L))
            mu = [_random_unit(rng, L) for _ in range(n)]
            mus = [_random_unit(rng, L) for _ in range(n)]
            seeds = [_random_unit(rng, L), _random_unit(rng, L)]
            star_seeds = [_random_unit(rng, L), _random_unit(rng, L)]
            assert rotation_c_recurrence(n, d, lam, mu, mus, seeds, star_seeds) == rotation_c_closed(
                n, d, lam, mu, mus, seeds, star_seeds
            )


def test_descent_tied_coefficients():
    L, n = 20, 5
    lam = zeta(5)
    mu = [CycNum.one(L)] * n
    mus = [lam.inv().embed(L)] * n
    c, cs = rotation_c_recurrence(n, 4, lam.embed(L), mu, mus, [CycNum.one(L), mus[1].inv()], [CycNum.zero(L)] * 2)
    assert c == rotation_sigma_cmu(n, 4, lam.embed(L), mu, mus, CycNum.one(L), CycNum.zero(L))[0]


def test_s3_passes_everything(s3):
    report = check_necessary(s3)
    assert report.passed, report.lines()
    for name in ("lem.rot_gamma(1)", "lem.rot_gamma(4)", "lem.rot_gamma(5)", "lemma.rot_desc(2c)", "lem.rotsigma"):
        assert report.get(name).passed


def test_nontrivial_mu_product_fails():
    out = build_rotation(RotationParams(3, 3, 3, 1, mu=[zeta(3), 1, 1], mu_star=[zeta(3, 2), 1, 1]))
    assert not isinstance(out, ActionSpec)
    assert not out.get("lem.rot_gamma(4)").passed


def test_sigma_needs_twisted_mu():
    bad = build_rotation(RotationParams(5, 5, 5, 4, c=1))
    assert not isinstance(bad, ActionSpec)
    assert not bad.get("lem.rot_cmu").passed
    lam = zeta(5)
    good = build_rotation(RotationParams(5, 5, 5, 4, mu_star=[lam.inv()] * 5, c=1))
    assert isinstance(good, ActionSpec), good.lines()
    assert not good.sigma.is_zero()


@pytest.mark.parametrize("n,d", [(3, 2), (4, 1), (4, 3), (5, 1), (5, 2), (5, 3), (6, 1), (6, 5)])
def test_single_orbit_rotations_certify(n, d):
    spec = build_rotation(RotationParams(n, n, n, d))
    assert isinstance(spec, ActionSpec), spec.lines()
    assert check_necessary(spec).passed


def test_hand_built_gamma_violation(s3):
    lam = s3.lam
    bad = s3.with_changes(gamma=(1, 2 * lam.inv(), lam**-2))
    assert not check_necessary(bad).get("lem.rot_gamma(1)").passed


def test_r3():
    spec = build_reflection(ReflectionParams(3, 2, 1))
    assert isinstance(spec, ActionSpec)
    assert spec.gamma == (1, 0, -1)
    assert check_necessary(spec).passed


def test_reflection_axis_through_two_vertices():
    assert fixed_vertices(4, 0) == [0, 2]
    assert swapped_vertices(3, 1) == [2]
    spec = build_reflection(ReflectionParams(4, 2, 0))
    assert isinstance(spec, ActionSpec), spec.lines()
    assert spec.gamma[0] == 0 and spec.gamma[2] == 0


def test_reflection_mu_power_condition():
    out = build_reflection(ReflectionParams(3, 2, 1, mu=[zeta(4), 1, 1], L=24))
    assert not isinstance(out, ActionSpec)
    assert not out.get("thm.refl(1)").passed


def test_reflection_needs_square_root():
    with pytest.raises(SquareRootNotInField):
        build_reflection(ReflectionParams(3, 2, 1, mu=[zeta(4), 1, 1]))


def test_n4d2_examples():
    spec = build_n4d2()
    assert isinstance(spec, ActionSpec)
    assert spec.gamma[1] ** 2 == -1
    assert verify_hopf_relations(spec, 6).passed
    flat = build_n4d2(c=0, c_star=0)
    assert isinstance(flat, ActionSpec)
    assert flat.gamma[1] ** 2 == 1
    assert check_necessary(flat).get("lem.n4d2").passed


def test_n4d2_mu_mismatch_rejected():
    # mu_0 mu_2 = i while mu_1^* mu_3^* = 1; c^* chosen so gamma_1 exists in Q(i)
    i = zeta(4)
    out = build_n4d2(mu=(i, 1, 1, 1), c_star=1 + i)
    assert not isinstance(out, ActionSpec)
    assert not out.get("prop.n4d2(II)").passed


def test_rotation_argument_errors():
    with pytest.raises(ValueError):
        build_rotation(RotationParams(3, 3, 3, 0))
    with pytest.raises(ValueError):
        build_rotation(RotationParams(4, 2, 2, 2))


def test_enumeration_with_fixed_vertices_is_empty():
    res = enumerate_actions(3, 3, 3, ROTATION, grid_order=1, d_values=[0])
    assert res.specs == [] and res.certified


def test_small_reflection_enumeration():
    res = enumerate_actions(3, 2, 2, REFLECTION, grid_order=2)
    assert res.specs and res.certified
    for spec in res.specs:
        assert all(a * b == 1 for a, b in zip(spec.mu, spec.mu_star))
        assert spec.gamma[0] in (0, 1)


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_actions(3, 3, 3, ROTATION, grid_order=3, budget=10)
