from __future__ import annotations

import pytest

from taftquiver.action import (
    REFLECTION,
    ROTATION,
    ActionSpec,
    ConstraintReport,
    SigmaTable,
    TaftData,
    act_g,
    act_x,
    is_inner_faithful,
    sigma_relation,
    verify_hopf_relations,
    verify_module_algebra,
    verify_structure,
)
from taftquiver.preprojective import NormalPath, PiElement, omega, reduce
from taftquiver.quiver import Arrow, FreeElement, PathWord
from taftquiver.scalars import CycNum, RootOfUnity, zeta


def fw(spec, *pairs):
    return FreeElement.from_terms(spec.n, [(PathWord.parse(t, spec.n), c) for t, c in pairs])


def test_taft_data_validation():
    with pytest.raises(ValueError):
        TaftData(3, 4, RootOfUnity(3, 1))
    with pytest.raises(ValueError):
        TaftData(3, 3, RootOfUnity(6, 1))
    with pytest.raises(ValueError):
        TaftData(1, 1, RootOfUnity(1, 0))
    assert TaftData.standard(2, 4).lam == RootOfUnity(2, 1)


def test_spec_validation(s3):
    with pytest.raises(ValueError):
        s3.with_changes(d=3)
    with pytest.raises(ValueError):
        s3.with_changes(mu=(0, 1, 1))
    with pytest.raises(ValueError):
        s3.with_changes(gamma=(1, 1))
    with pytest.raises(ValueError):
        s3.with_changes(kind="shear")
    with pytest.raises(ValueError):
        s3.with_changes(gamma=(zeta(5), 1, 1))


def test_s3_data(s3):
    lam = s3.lam
    assert s3.gamma == (1, lam**-1, lam**-2)
    assert s3.sigma.is_zero() and (s3.tau, s3.kappa) == (1, 3)


def test_g_examples(s3, r3):
    e0 = fw(s3, ("e0", s3.one()))
    assert act_g(s3, e0) == fw(s3, ("e1", s3.one()))
    assert act_g(s3, fw(s3, ("a0.a1", s3.one()))) == fw(s3, ("a1.a2", s3.one()))
    assert act_g(r3, fw(r3, ("a0", r3.one()))) == fw(r3, ("a1*", r3.one()))


def test_x_examples(s3):
    lam = s3.lam
    one = s3.one()
    assert act_x(s3, fw(s3, ("e0", one))) == fw(s3, ("e0", one), ("e1", -(lam**-1)))
    assert act_x(s3, fw(s3, ("a0", one))) == fw(s3, ("a0", lam**2), ("a1", -(lam**2)))


@pytest.mark.parametrize("name", ["s3", "r3", "n4d2"])
def test_relations_descend(name, request):
    spec = request.getfixturevalue(name)
    for i in range(spec.n):
        om = omega(i, spec.n)
        assert reduce(act_g(spec, om)).is_zero()
        assert reduce(act_x(spec, om)).is_zero()
        assert sigma_relation(spec, i).is_zero()


@pytest.mark.parametrize("name", ["s3", "r3"])
def test_reference_actions_verify(name, request):
    spec = request.getfixturevalue(name)
    for report in (verify_structure(spec), verify_hopf_relations(spec, 4), verify_module_algebra(spec, 4)):
        assert report.passed, report.lines()
    assert is_inner_faithful(spec)


def test_hopf_names(s3):
    assert verify_hopf_relations(s3, 4).names() == ["g^m-1", "x^r", "gx-lambda*xg"]


def test_broken_gamma_has_vertex_witness(s3):
    bad = s3.with_changes(gamma=(2, s3.gamma[1], s3.gamma[2]))
    entry = verify_hopf_relations(bad, 2).get("gx-lambda*xg")
    assert not entry.passed and entry.witness == "e0"
    assert not verify_structure(bad).get("vertact.gamma").passed


def test_mu_relation_witness(s3):
    bad = s3.with_changes(mu=(zeta(3), zeta(3, 2), 1))
    entry = verify_module_algebra(bad, 2).get("eq.mu_rel")
    assert not entry.passed and entry.witness == "Omega(0)"


def test_r3_sigma(r3):
    one = r3.one()
    s = r3.sigma.entries
    assert r3.gamma == (1, 0, -1)
    assert s[Arrow(0)] == fw(r3, ("a0", one))
    assert s[Arrow(1)] == fw(r3, ("a0*", one))
    assert s[Arrow(0, True)] == fw(r3, ("a1", -one))
    assert s[Arrow(1, True)] == fw(r3, ("a1*", -one))


def test_n4d2_relations(n4d2):
    report = verify_hopf_relations(n4d2, 6)
    assert report.passed, report.lines()


def test_not_inner_faithful(s3):
    zero = s3.with_changes(gamma=(0, 0, 0))
    assert not is_inner_faithful(zero)
    fixed = ActionSpec(TaftData.standard(3, 3), 3, ROTATION, 0, (1, 1, 1), (1, 1, 1), (0, 0, 0))
    assert not is_inner_faithful(fixed)
    assert verify_structure(fixed).passed


def test_operator_properties(s3, r3):
    for spec in (s3, r3):
        for ell in range(4):
            from taftquiver.preprojective import pi_basis

            for p in pi_basis(spec.n, ell):
                x = PiElement.path(p, spec.n, spec.one())
                assert act_g(spec, act_x(spec, x)) == act_x(spec, act_g(spec, x)).scale(spec.lam)
                gx = act_g(spec, x)
                assert not gx.is_zero() and gx.degrees() == {ell}


def test_report_requires_witness():
    report = ConstraintReport()
    report.add("ok", True)
    with pytest.raises(ValueError):
        report.add("bad", False)
    report.add("bad", False, "e0")
    assert not report.passed and report.to_json()["entries"][1]["witness"] == "e0"
    assert report.lines() == ["PASS  ok", "FAIL  bad  witness: e0"]


def test_sigma_table_drops_zero_entries():
    table = SigmaTable({Arrow(0): FreeElement(3)})
    assert table.is_zero() and table == SigmaTable()
