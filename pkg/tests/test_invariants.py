from __future__ import annotations

import pytest

from taftquiver.action import ActionSpec, act_g, act_x
from taftquiver.classify import RotationParams, build_rotation
from taftquiver.errors import HypothesisViolation
from taftquiver.invariants import (
    compare_invariants_center,
    degree0_dimension,
    hypothesis_status,
    invariant_basis,
    phi,
    phi_product,
    phi_product_pairs,
    predicted_invariants,
    require_hypothesis,
    span_equal,
    verify_invariant_prediction,
    weight_table,
    x_on_phi,
)
from taftquiver.preprojective import NormalPath, PiElement, pi_basis


def P(k, u, v):
    return NormalPath(k, u, v)


def elem(spec, *pairs):
    return PiElement.from_terms(spec.n, list(pairs))


def test_phi_examples(s3):
    one, lam = s3.one(), s3.lam
    assert phi(s3, 0, P(0, 0, 0)) == PiElement.unit(3)
    phi1 = phi(s3, 1, P(0, 0, 0))
    assert phi1 == elem(s3, (P(0, 0, 0), one), (P(1, 0, 0), lam**-1), (P(2, 0, 0), lam**-2))
    assert act_g(s3, phi1) == phi1.scale(lam)
    assert phi(s3, 0, P(0, 1, 1)) == elem(s3, (P(0, 1, 1), one), (P(1, 1, 1), one), (P(2, 1, 1), one))


def test_weights_of_s3(s3):
    table = weight_table(s3)
    assert table.w == (2, 2, 2)
    assert all(ok for ok, _ in table.consistency())
    for k in range(3):
        for u in range(4):
            for v in range(4):
                assert table.weight(k, u, v) == (v - u) % 3


def test_x_on_phi_examples(s3):
    lam = s3.lam
    c, beta = x_on_phi(s3, 0, P(0, 1, 1))
    assert c == 0 and beta == 1
    c, _ = x_on_phi(s3, 0, P(0, 1, 0))
    assert c == lam**-1 - 1 and c != 0
    # the direct operator is the oracle here: lambda^-2 - lambda^2 is nonzero
    c, beta = x_on_phi(s3, 2, P(0, 2, 0))
    assert c == lam**-2 - lam**2 and c != 0
    assert act_x(s3, phi(s3, 2, P(0, 2, 0))) == phi(s3, 0, P(0, 2, 0)).scale(c)


def test_x_on_phi_matches_operator(s3):
    for alpha in range(3):
        for ell in range(5):
            for p in pi_basis(3, ell):
                c, beta = x_on_phi(s3, alpha, p)
                assert act_x(s3, phi(s3, alpha, p)) == phi(s3, beta, p).scale(c)


def test_phi_product_examples(s3):
    lam = s3.lam
    ok, lhs, _ = phi_product(s3, 0, 0, P(0, 1, 1), P(0, 1, 1))
    assert ok and lhs == phi(s3, 0, P(0, 2, 2))
    ok, lhs, _ = phi_product(s3, 0, 1, P(0, 1, 1), P(0, 1, 1))
    assert ok and lhs == phi(s3, 1, P(0, 2, 2))
    ok, lhs, _ = phi_product(s3, 0, 1, P(0, 2, 1), P(0, 1, 2))
    assert ok and lhs == phi(s3, 1, P(0, 3, 3)).scale(lam**-1)


def test_phi_product_over_all_pairs(s3):
    for p, q in phi_product_pairs(3, 6):
        for a in range(3):
            for b in range(3):
                assert phi_product(s3, a, b, p, q)[0]


def test_invariant_dimensions(s3):
    basis = invariant_basis(s3, 4)
    assert basis.dims()[:4] == [1, 0, 1, 2]
    assert span_equal(basis[2], [phi(s3, 0, P(0, 1, 1))])
    assert span_equal(basis[3], [phi(s3, 0, P(0, 3, 0)), phi(s3, 0, P(0, 0, 3))])
    for ell in range(5):
        for e in basis[ell]:
            assert act_g(s3, e) == e and act_x(s3, e).is_zero()
        assert span_equal(basis[ell], predicted_invariants(s3, ell))


def test_invariants_closed_under_products(s3):
    basis = invariant_basis(s3, 4)
    for a in basis[1] + basis[2]:
        for b in basis[2]:
            prod = a * b
            assert act_g(s3, prod) == prod and act_x(s3, prod).is_zero()


def test_invariants_equal_centre(s3):
    report = compare_invariants_center(s3, 6)
    assert report.passed and not report.tags, report.lines()
    assert report.get("generated[6]").passed


def test_prediction_report(s3):
    report = verify_invariant_prediction(s3, 4)
    assert report.passed, report.lines()


def test_hypothesis(s3, r3, n4d2):
    assert hypothesis_status(s3) == (True, "")
    for spec in (r3, n4d2):
        ok, why = hypothesis_status(spec)
        assert not ok and why
        with pytest.raises(HypothesisViolation):
            require_hypothesis(spec)
        with pytest.raises(HypothesisViolation):
            weight_table(spec)


def test_phi_refuses_reflections(r3):
    with pytest.raises(HypothesisViolation):
        phi(r3, 0, P(0, 0, 0))


def test_gcd_two_is_tagged():
    spec = build_rotation(RotationParams(4, 2, 2, 2, xi=(1, -1)))
    assert isinstance(spec, ActionSpec)
    report = compare_invariants_center(spec, 2)
    assert report.tags == ["no paper claim: gcd(d, n) > 1"]
    assert report.get("dim[0]") is not None
    assert report.get("generated[0]") is None


def test_reflection_invariants_are_tagged(r3):
    report = compare_invariants_center(r3, 2)
    assert report.tags and report.tags[0].startswith("no paper claim")
    assert invariant_basis(r3, 2).dims()[0] == degree0_dimension(r3)
