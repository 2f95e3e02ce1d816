"""The eight acceptance criteria as callable checks, shared by the test-suite and ``selftest``."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from typing import Callable

from .action import ActionSpec, REFLECTION, ROTATION, sigma_power, verify_hopf_relations, verify_module_algebra
from .catalog import spec_n4d2, spec_r3, spec_s3
from .classify import RotationParams, build_rotation, check_necessary, enumerate_actions
from .invariants import compare_invariants_center, degree0_dimension, phi, phi_product, phi_product_pairs, x_on_phi
from .preprojective import NormalPath, normal_form, normal_form_by, pi_basis, random_word
from .quiver import Arrow
from .scalars import RootOfUnity

__all__ = ["CriterionResult", "CRITERIA", "run_criterion", "run_all"]


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    limit: float | None

    def line(self) -> str:
        limit = f" (limit {self.limit:.0f}s)" if self.limit else ""
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  criterion {self.number}: {self.title}  [{self.seconds:.1f}s{limit}]  {self.detail}"


def _rewriting(seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    strategies = {
        "leftmost": lambda sites: sites[0],
        "rightmost": lambda sites: sites[-1],
        "random": rng.choice,
    }
    disagreements = 0
    for n in (3, 4, 5, 6):
        for _ in range(1000):
            w = random_word(n, rng.randrange(9), rng)
            ref = normal_form(w, n)
            if any(normal_form_by(w, n, pick) != ref for pick in strategies.values()):
                disagreements += 1
        for ell in range(9):
            basis = pi_basis(n, ell)
            if len(basis) != n * (ell + 1) or len(set(basis)) != len(basis):
                return False, f"pi_basis({n}, {ell}) has the wrong size"
    return disagreements == 0, f"{disagreements} disagreements over 4000 words"


def _well_defined(seed: int) -> tuple[bool, str]:
    failures = []
    for name, spec in (("S3", spec_s3()), ("R3", spec_r3())):
        D = 2 * spec.n
        for report in (verify_module_algebra(spec, D), verify_hopf_relations(spec, D)):
            failures += [f"{name}: {e.line()}" for e in report.failures()]
    return not failures, "; ".join(failures) or "S3 and R3 pass at D = 2n"


_CLASSIFY_ENTRIES = ("lem.rot_gamma(1)", "lem.rot_gamma(5)", "lemma.rot_desc(1)", "lemma.rot_desc(2c)", "lem.rot_cmu")


def _rotation_exhaustion(seed: int) -> tuple[bool, str]:
    res = enumerate_actions(3, 3, 3, ROTATION, grid_order=3, gamma_seeds=(1,))
    audited = [name for name in _CLASSIFY_ENTRIES if res.entry_totals.get(name, [0, 0])[1]]
    ok = bool(res.specs) and not res.violations and len(audited) == len(_CLASSIFY_ENTRIES)
    return ok, f"{len(res.specs)} valid actions, {len(res.violations)} counterexamples"


def _reflection_forcing(seed: int) -> tuple[bool, str]:
    res = enumerate_actions(3, 2, 2, REFLECTION, grid_order=2)
    bad = []
    for spec in res.specs:
        if spec.r != 2 or spec.lam != -spec.one() or any(a * b != spec.one() for a, b in zip(spec.mu, spec.mu_star)):
            bad.append(spec)
    none3 = enumerate_actions(3, 3, 6, REFLECTION, grid_order=2)
    ok = bool(res.specs) and not bad and not res.violations and not none3.specs
    return ok, f"{len(res.specs)} valid with r = 2 ({len(bad)} off-pattern), {len(none3.specs)} valid with r = 3"


def _exceptional(seed: int) -> tuple[bool, str]:
    spec = spec_n4d2()
    sq = sigma_power(spec, Arrow(0, False), 2)
    hopf = verify_hopf_relations(spec, 8)
    module = verify_module_algebra(spec, 8)
    ok = bool(sq) and hopf.passed and module.passed and check_necessary(spec).passed
    return ok, f"sigma^2(a0) = {sq}; x^2 = 0 through degree 8: {hopf.get('x^r').passed}"


def _closed_forms(seed: int) -> tuple[bool, str]:
    from .action import act_x

    spec = spec_s3()
    mismatches = 0
    for alpha in range(spec.r):
        for ell in range(7):
            for p in pi_basis(spec.n, ell):
                c, beta = x_on_phi(spec, alpha, p)
                mismatches += act_x(spec, phi(spec, alpha, p)) != phi(spec, beta, p).scale(c)
    products = list(phi_product_pairs(spec.n, 6, minimum=0))
    bad = sum(
        not phi_product(spec, a, b, p, q)[0] for p, q in products for a in range(spec.r) for b in range(spec.r)
    )
    return mismatches == 0 and bad == 0, f"{mismatches} x-action mismatches, {bad} product mismatches"


def _invariants_center(seed: int) -> tuple[bool, str]:
    report = compare_invariants_center(spec_s3(), 6)
    failed = [e.name for e in report.failures()]
    return report.passed and not report.tags, "all degrees agree" if not failed else ", ".join(failed)


def _degree_zero(seed: int) -> tuple[bool, str]:
    cases = [
        (4, 2, RotationParams(4, 2, 2, 2, xi=(1, -1))),
        (6, 3, RotationParams(6, 2, 2, 3, xi=(1, 1, -1))),
        (6, 2, RotationParams(6, 3, 3, 2, xi=(1, RootOfUnity(3, -1)))),
    ]
    out, ok = [], True
    for n, d, params in cases:
        spec = build_rotation(params)
        if not isinstance(spec, ActionSpec) or any(g.is_zero() for g in spec.gamma):
            return False, f"({n},{d}) reference action failed to certify"
        dim = degree0_dimension(spec)
        ok &= dim == math.gcd(n, d)
        out.append(f"({n},{d}): {dim}")
    return ok, ", ".join(out)


CRITERIA: list[tuple[int, str, Callable[[int], tuple[bool, str]], float | None]] = [
    (1, "rewriting soundness", _rewriting, 60),
    (2, "action well-definedness", _well_defined, 60),
    (3, "rotation necessity by exhaustion", _rotation_exhaustion, 600),
    (4, "reflection forcing", _reflection_forcing, 60),
    (5, "exceptional n = 4, d = 2 action", _exceptional, 60),
    (6, "invariant closed forms", _closed_forms, 120),
    (7, "invariants equal the centre", _invariants_center, 120),
    (8, "degree-0 invariant count", _degree_zero, None),
]


def run_criterion(number: int, seed: int = 0) -> CriterionResult:
    _, title, fn, limit = CRITERIA[number - 1]
    start = time.perf_counter()
    ok, detail = fn(seed)
    seconds = time.perf_counter() - start
    if limit is not None and seconds > limit:
        ok, detail = False, f"{detail}; over the time limit"
    return CriterionResult(number, title, ok, detail, seconds, limit)


def run_all(seed: int = 0, emit: Callable[[str], None] | None = None) -> list[CriterionResult]:
    results = []
    for number, *_ in CRITERIA:
        res = run_criterion(number, seed)
        if emit:
            emit(res.line())
        results.append(res)
    return results
