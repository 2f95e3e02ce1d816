"""Classified families of Taft actions on Pi_Q, their necessary conditions, and exhaustive search.

Rotation families are rebuilt from seeds through the recurrences forced by
(sigma3) and descent; reflection families from the square-root relations
between neighbouring vertex scalars.  ``check_necessary`` evaluates every
named necessary condition on a concrete spec, and ``enumerate_actions`` certifies
those conditions against brute force on small grids.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .action import (
    REFLECTION,
    ROTATION,
    ActionSpec,
    ConstraintReport,
    SigmaTable,
    TaftData,
    act_g,
    is_inner_faithful,
    sigma_power,
    verify_hopf_relations,
    verify_module_algebra,
    verify_structure,
)
from .errors import BudgetExceeded
from .quiver import Arrow, FreeElement, PathWord, arrow_word, check_n
from .scalars import CycNum, RootOfUnity, cyc_sqrt, root_exponent, zeta

__all__ = [
    "RotationParams",
    "ReflectionParams",
    "EnumerationResult",
    "build_rotation",
    "build_reflection",
    "build_n4d2",
    "check_necessary",
    "enumerate_actions",
    "rotation_c_recurrence",
    "rotation_c_closed",
    "rotation_sigma_cmu",
    "fixed_vertices",
    "swapped_vertices",
]


# ---------------------------------------------------------------------------
# small helpers


def _prod(values: Iterable[CycNum], L: int) -> CycNum:
    out = CycNum.one(L)
    for v in values:
        out = out * v
    return out


def _cyc(value, L: int) -> CycNum:
    if isinstance(value, CycNum):
        return value.embed(L) if value.order != L else value
    if isinstance(value, RootOfUnity):
        return value.to_cyc(L)
    return CycNum.rational(L, value)


def _aw(i: int, starred: bool, n: int) -> PathWord:
    return arrow_word(Arrow(i % n, starred), n)


def _single(n: int, word: PathWord, coeff: CycNum) -> FreeElement:
    return FreeElement.word(word, n, coeff)


def _coef(elem: FreeElement, word: PathWord, L: int) -> CycNum:
    return elem.terms.get(word, CycNum.zero(L))


def _sigma(spec: ActionSpec, i: int, starred: bool) -> FreeElement:
    return spec.sigma.image(Arrow(i % spec.n, starred), spec.n)


def _check(report: ConstraintReport, name: str, conditions: Iterable[tuple[bool, str]]) -> None:
    for ok, witness in conditions:
        if not ok:
            report.add(name, False, witness)
            return
    report.add(name, True)


def _shapes(n: int, d: int) -> tuple[str | None, str | None]:
    """Where sigma(a_i) and sigma(a_i^*) may live for a rotation by d: 'e', 'a*', 'a' or None."""
    unstar = "a*" if d == n - 2 else "e" if d == n - 1 else None
    star = "a" if d == 2 else "e" if d == 1 else None
    return unstar, star


def _slot_word(kind: str, i: int, starred: bool, n: int) -> PathWord:
    """The single path sigma(a_i) (or sigma(a_i^*)) is a multiple of."""
    if not starred:
        return PathWord(i % n) if kind == "e" else _aw(i - 1, True, n)
    return PathWord((i + 1) % n) if kind == "e" else _aw(i + 1, False, n)


# ---------------------------------------------------------------------------
# rotation sigma coefficients


def rotation_c_recurrence(
    n: int,
    d: int,
    lam: CycNum,
    mu: Sequence[CycNum],
    mu_star: Sequence[CycNum],
    c_seeds: Sequence[CycNum],
    c_star_seeds: Sequence[CycNum],
) -> tuple[list[CycNum], list[CycNum]]:
    """c_i and c_i^* for i = 0..n-1 from the (sigma3) recurrences, without wrapping around."""
    L = lam.order
    zero = CycNum.zero(L)
    c, cs = [zero] * n, [zero] * n
    unstar, star = _shapes(n, d)
    if unstar == "e":
        c[0] = c_seeds[0]
        for i in range(1, n):
            c[i] = lam * mu[i] * c[i - 1]
    elif unstar == "a*":
        c[0], c[1] = c_seeds[0], c_seeds[1]
        for i in range(2, n):
            c[i] = lam * mu[i] / mu_star[i - 1] * c[i - 2]
    if star == "e":
        cs[0] = c_star_seeds[0]
        for i in range(1, n):
            cs[i] = (lam * mu_star[i - 1]).inv() * cs[i - 1]
    elif star == "a":
        cs[0], cs[1] = c_star_seeds[0], c_star_seeds[1]
        for i in range(2, n):
            cs[i] = lam.inv() * mu[i - 1] / mu_star[i - 2] * cs[i - 2]
    return c, cs


def rotation_c_closed(
    n: int,
    d: int,
    lam: CycNum,
    mu: Sequence[CycNum],
    mu_star: Sequence[CycNum],
    c_seeds: Sequence[CycNum],
    c_star_seeds: Sequence[CycNum],
) -> tuple[list[CycNum], list[CycNum]]:
    """The same coefficients from the closed products (parity-split for shifts n-2 and 2)."""
    L = lam.order
    zero = CycNum.zero(L)
    P = lambda idx, table: _prod((table[t] for t in idx), L)  # noqa: E731
    c, cs = [zero] * n, [zero] * n
    unstar, star = _shapes(n, d)
    for i in range(n):
        if unstar == "e":
            c[i] = lam**i * P(range(1, i + 1), mu) * c_seeds[0]
        elif unstar == "a*" and i % 2 == 0:
            c[i] = lam ** (i // 2) * P(range(2, i + 1, 2), mu) / P(range(1, i, 2), mu_star) * c_seeds[0]
        elif unstar == "a*":
            c[i] = lam ** ((i - 1) // 2) * P(range(3, i + 1, 2), mu) / P(range(2, i, 2), mu_star) * c_seeds[1]
        if star == "e":
            cs[i] = (lam**i * P(range(i), mu_star)).inv() * c_star_seeds[0]
        elif star == "a" and i % 2 == 0:
            cs[i] = lam ** (-(i // 2)) * P(range(1, i, 2), mu) / P(range(0, i - 1, 2), mu_star) * c_star_seeds[0]
        elif star == "a":
            cs[i] = lam ** (-((i - 1) // 2)) * P(range(2, i, 2), mu) / P(range(1, i - 1, 2), mu_star) * c_star_seeds[1]
    return c, cs


def rotation_sigma_cmu(
    n: int, d: int, lam: CycNum, mu: Sequence[CycNum], mu_star: Sequence[CycNum], c: CycNum, c_star: CycNum
) -> tuple[list[CycNum], list[CycNum]]:
    """Coefficients once descent ties the seeds: lambda^i mu_1..mu_i c and (lambda^i mu_0^*..mu_{i-1}^*)^-1 c^*."""
    L = lam.order
    zero = CycNum.zero(L)
    unstar, star = _shapes(n, d)
    cu = [lam**i * _prod(mu[1 : i + 1], L) * c if unstar else zero for i in range(n)]
    cs = [(lam**i * _prod(mu_star[:i], L)).inv() * c_star if star else zero for i in range(n)]
    return cu, cs


def _sigma_table(n: int, d: int, c: Sequence[CycNum], cs: Sequence[CycNum]) -> SigmaTable:
    unstar, star = _shapes(n, d)
    entries = {}
    for i in range(n):
        if unstar and c[i]:
            entries[Arrow(i, False)] = _single(n, _slot_word(unstar, i, False, n), c[i])
        if star and cs[i]:
            entries[Arrow(i, True)] = _single(n, _slot_word(star, i, True, n), cs[i])
    return SigmaTable(entries)


def _read_c(spec: ActionSpec) -> tuple[list[CycNum], list[CycNum]]:
    """c_i, c_i^* read off a rotation spec's sigma table."""
    n, L = spec.n, spec.L
    unstar, star = _shapes(n, spec.d)
    zero = CycNum.zero(L)
    c = [_coef(_sigma(spec, i, False), _slot_word(unstar, i, False, n), L) if unstar else zero for i in range(n)]
    cs = [_coef(_sigma(spec, i, True), _slot_word(star, i, True, n), L) if star else zero for i in range(n)]
    return c, cs


# ---------------------------------------------------------------------------
# parameter records


@dataclass
class RotationParams:
    """Free parameters of a rotation action: gamma_{i+1} = xi_{i mod tau} gamma_i."""

    n: int
    r: int
    m: int
    d: int
    mu: Sequence = ()
    mu_star: Sequence = ()
    gamma0: object = 1
    xi: Sequence = ()
    c: object = 0
    c_star: object = 0
    lam: RootOfUnity | None = None
    L: int = 0

    def working_order(self) -> int:
        return self.L or math.lcm(self.m, self.n, 4)


@dataclass
class ReflectionParams:
    """Free parameters of a reflection action; r = 2, lambda = -1 and mu^* = mu^-1 are forced."""

    n: int
    m: int
    d: int
    mu: Sequence = ()
    gamma_seed: object = 1
    c_k: dict[int, object] = field(default_factory=dict)
    c_j_signs: dict[int, int] = field(default_factory=dict)
    L: int = 0

    def working_order(self) -> int:
        return self.L or math.lcm(self.m, self.n, 4)


def _default_xi(n: int, d: int, r: int, lam: CycNum) -> list[CycNum]:
    """For a single orbit, the xi with xi^d = lambda^-1 among powers of lambda."""
    if math.gcd(n, d) != 1 or math.gcd(d, r) != 1:
        raise ValueError("xi must be given explicitly when gcd(n, d) > 1")
    return [lam ** (-pow(d, -1, r))]


def _finish(spec: ActionSpec, D: int | None) -> ActionSpec | ConstraintReport:
    report = verify_structure(spec)
    report.extend(check_necessary(spec))
    report.extend(verify_module_algebra(spec, D))
    report.extend(verify_hopf_relations(spec, D))
    report.add("inner_faithful", is_inner_faithful(spec), "x acts as zero in degree <= 1")
    return spec if report.passed else report


def build_rotation(p: RotationParams, D: int | None = None) -> ActionSpec | ConstraintReport:
    """Assemble a rotation action from seeds and certify it; returns the failing report otherwise."""
    n, d = check_n(p.n), p.d
    if not 0 < d < n:
        raise ValueError(f"rotation shift must satisfy 0 < d < n, got d={d}")
    L = p.working_order()
    lam_root = p.lam or RootOfUnity(p.r, 1)
    taft = TaftData(p.r, p.m, lam_root)
    lam = lam_root.to_cyc(L)
    mu = [_cyc(v, L) for v in (p.mu or [1] * n)]
    mu_star = [_cyc(v, L) for v in (p.mu_star or [1] * n)]
    gamma0 = _cyc(p.gamma0, L)
    tau = math.gcd(n, d)
    xi = [_cyc(v, L) for v in p.xi] if p.xi else _default_xi(n, d, p.r, lam)
    if len(xi) != tau:
        raise ValueError(f"xi needs tau = {tau} entries, got {len(xi)}")
    gamma = [gamma0]
    for i in range(n - 1):
        gamma.append(xi[i % tau] * gamma[-1])
    c0, cs0 = _cyc(p.c, L), _cyc(p.c_star, L)
    # descent ties the second seed to the first: c_0 = mu_1^* c_1 and c_1^* = mu_0 c_0^*
    c, cs = rotation_c_recurrence(n, d, lam, mu, mu_star, [c0, c0 / mu_star[1]], [cs0, mu[0] * cs0])
    spec = ActionSpec(taft, n, ROTATION, d, mu, mu_star, gamma, _sigma_table(n, d, c, cs), L)
    return _finish(spec, D)


def build_n4d2(
    mu: Sequence = (1, 1, 1, 1),
    gamma0=1,
    c=1,
    c_star=2,
    mu_star: Sequence | None = None,
    m: int = 2,
    L: int = 0,
    D: int | None = None,
) -> ActionSpec | ConstraintReport:
    """The exceptional n = 4, d = 2 family with lambda = -1; gamma_1 from the quadratic relation."""
    n = 4
    L = L or math.lcm(m, n, 4)
    mu = [_cyc(v, L) for v in mu]
    mu_star = [_cyc(v, L) for v in mu_star] if mu_star is not None else [-(v.inv()) for v in mu]
    g0, c, cs = _cyc(gamma0, L), _cyc(c, L), _cyc(c_star, L)
    g1 = cyc_sqrt(g0 * g0 * mu[0] * mu[2] - mu[3].inv() * c * cs)
    g1 = g1.embed(L) if g1.order != L else g1
    gamma = [g0, g1, -g0, -g1]
    sign = lambda i: CycNum.rational(L, (-1) ** i)  # noqa: E731
    cu = [sign(i) * _prod(mu[1 : i + 1], L) * c for i in range(n)]
    cst = [sign(i) * _prod(mu_star[:i], L).inv() * cs for i in range(n)]
    spec = ActionSpec(TaftData(2, m, RootOfUnity(2, 1)), n, ROTATION, 2, mu, mu_star, gamma, _sigma_table(n, 2, cu, cst), L)
    return _finish(spec, D)


# ---------------------------------------------------------------------------
# reflections


def fixed_vertices(n: int, d: int) -> list[int]:
    return [j for j in range(n) if (n - (d + j)) % n == j]


def swapped_vertices(n: int, d: int) -> list[int]:
    """Vertices k with g.k = k+1 (the axis passes between k and k+1)."""
    return [k for k in range(n) if (n - (d + k)) % n == (k + 1) % n]


def _reflection_gamma(n: int, d: int, mu: Sequence[CycNum], seed: CycNum, L: int) -> list[CycNum]:
    zero = CycNum.zero(L)
    fixed = set(fixed_vertices(n, d))
    gamma: list[CycNum | None] = [zero if i in fixed else None for i in range(n)]
    if seed.is_zero():
        return [zero] * n
    blocked = {(j - 1) % n for j in fixed} | fixed
    ratio = lambda i: mu[i] / mu[(n - (d + i + 1)) % n]  # noqa: E731
    start = min(i for i in range(n) if i not in fixed)
    gamma[start] = seed
    queue = [start]
    while queue:
        i = queue.pop(0)
        gi = (n - (d + i)) % n
        moves = [(gi, -gamma[i])]
        if i not in blocked:
            moves.append(((i + 1) % n, None))
        if (i - 1) % n not in blocked:
            moves.append(((i - 1) % n, None))
        for target, value in moves:
            if gamma[target] is not None:
                continue
            if value is None:
                root = cyc_sqrt(ratio(i if target == (i + 1) % n else target))
                root = root.embed(L) if root.order != L else root
                value = root * gamma[i] if target == (i + 1) % n else gamma[i] / root
            gamma[target] = value
            queue.append(target)
    return [g if g is not None else zero for g in gamma]


def build_reflection(p: ReflectionParams, D: int | None = None) -> ActionSpec | ConstraintReport:
    """Assemble a reflection action: gamma by square roots, sigma from the c_j and c_k."""
    n, d = check_n(p.n), p.d
    if not 0 <= d < n:
        raise ValueError(f"reflection offset must satisfy 0 <= d < n, got d={d}")
    L = p.working_order()
    mu = [_cyc(v, L) for v in (p.mu or [1] * n)]
    mu_star = [v.inv() for v in mu]
    gamma = _reflection_gamma(n, d, mu, _cyc(p.gamma_seed, L), L)
    entries: dict[Arrow, FreeElement] = {}
    for j in fixed_vertices(n, d):
        sign = p.c_j_signs.get(j, 1)
        root = cyc_sqrt(mu[j] * mu[(j - 1) % n])
        root = root.embed(L) if root.order != L else root
        cj = gamma[(j - 1) % n] * root * sign
        jm = (j - 1) % n
        entries[Arrow(jm, False)] = _single(n, _aw(jm, False, n), mu[j].inv() * cj)
        entries[Arrow(j, False)] = _single(n, _aw(jm, True, n), cj)
        entries[Arrow(jm, True)] = _single(n, _aw(j, False, n), -(mu[j] * mu[jm]).inv() * cj)
        entries[Arrow(j, True)] = _single(n, _aw(j, True, n), -mu[j].inv() * cj)
    for k in swapped_vertices(n, d):
        ck = _cyc(p.c_k.get(k, 0), L)
        entries[Arrow(k, False)] = _single(n, PathWord(k), ck)
        entries[Arrow(k, True)] = _single(n, PathWord((k + 1) % n), -mu[k].inv() * ck)
    spec = ActionSpec(TaftData(2, p.m, RootOfUnity(2, 1)), n, REFLECTION, d, mu, mu_star, gamma, SigmaTable(entries), L)
    return _finish(spec, D)


# ---------------------------------------------------------------------------
# necessary conditions


def _g_power_coeff(spec: ActionSpec, a: Arrow, k: int) -> tuple[CycNum, Arrow]:
    c = spec.one()
    for _ in range(k):
        e, a = spec.g_arrow(a)
        c = c * e
    return c, a


def _common_checks(spec: ActionSpec, report: ConstraintReport) -> None:
    n = spec.n
    _check(
        report,
        "prop.vertact",
        (
            (spec.gamma[spec.g_vertex(i)] == spec.lam_inv * spec.gamma[i], f"gamma({spec.g_vertex(i)}) != lambda^-1 gamma({i})")
            for i in range(n)
        ),
    )
    _check(
        report,
        "cor.fixed(1)",
        ((spec.gamma[i].is_zero(), f"gamma({i}) != 0 at a fixed vertex") for i in range(n) if spec.g_vertex(i) == i),
    )
    if all(spec.g_vertex(i) == i for i in range(n)):
        report.add("cor.fixed(2)", not is_inner_faithful(spec), "x acts nonzero although g fixes every vertex")
    arrows = [Arrow(i, s) for i in range(n) for s in (False, True)]

    def gam_sig(a: Arrow) -> bool:
        r = spec.r
        c, b = _g_power_coeff(spec, a, r)
        lhs = FreeElement.from_terms(
            n, [(arrow_word(b, n), spec.gamma[a.source(n)] ** r * c), (arrow_word(a, n), -(spec.gamma[a.target(n)] ** r))]
        )
        return lhs == sigma_power(spec, a, r)

    _check(report, "eq.gam_sig", ((gam_sig(a), f"relation fails at {a}") for a in arrows))


def _rotation_checks(spec: ActionSpec, report: ConstraintReport) -> None:
    n, d, r, m, L = spec.n, spec.d, spec.r, spec.m, spec.L
    lam, mu, mus, gamma = spec.lam, spec.mu, spec.mu_star, spec.gamma
    one = spec.one()
    tau, kappa = spec.tau, spec.kappa
    arrows = [Arrow(i, s) for i in range(n) for s in (False, True)]
    unstar, star = _shapes(n, d)
    n4d2 = n == 4 and d == 2
    c, cs = _read_c(spec)

    # lem.rot_sigma: support and closed forms with independent seeds
    def support():
        for i in range(n):
            for starred, kind in ((False, unstar), (True, star)):
                img = _sigma(spec, i, starred)
                allowed = {_slot_word(kind, i, starred, n)} if kind else set()
                yield set(img.terms) <= allowed, f"sigma(a{i}{'*' if starred else ''}) outside its slot"
        closed = rotation_c_closed(n, d, lam, mu, mus, c[:2], cs[:2])
        for i in range(n):
            yield closed[0][i] == c[i], f"c_{i} differs from its closed form"
            yield closed[1][i] == cs[i], f"c*_{i} differs from its closed form"

    _check(report, "lem.rot_sigma", support())

    if not n4d2:
        _check(report, "lem.rotsigma", ((sigma_power(spec, a, r).is_zero(), f"sigma^r({a}) != 0") for a in arrows))

    nonzero = any(not g.is_zero() for g in gamma)
    orbit_prod = lambda table, i, k: _prod((table[(i + t * d) % n] for t in range(k)), L)  # noqa: E731
    if nonzero:
        report.add("lem.rot_gamma(r=kappa)", r == kappa, f"r={r} but kappa={kappa}")
    if nonzero and not n4d2:
        _check(
            report,
            "lem.rot_gamma(1)",
            itertools.chain.from_iterable(
                (
                    (gamma[(i + 1) % n] ** r == orbit_prod(mu, i, r) * gamma[i] ** r, f"gamma({i + 1})^r != mu-product * gamma({i})^r"),
                    (gamma[(i + 1) % n] ** r == orbit_prod(mus, i, r).inv() * gamma[i] ** r, f"gamma({i + 1})^r != (mu*-product)^-1 gamma({i})^r"),
                )
                for i in range(n)
            ),
        )
        _check(report, "lem.rot_gamma(2)", ((not gamma[i].is_zero(), f"gamma({i}) = 0") for i in range(n)))
        _check(
            report,
            "lem.rot_gamma(3)",
            ((orbit_prod(mus, i, kappa) == orbit_prod(mu, i, kappa).inv(), f"zeta*_{i} != zeta_{i}^-1") for i in range(tau)),
        )
        _check(
            report,
            "lem.rot_gamma(4)",
            [(_prod(mu, L) == one, "mu_0...mu_{n-1} != 1"), (_prod(mus, L) == one, "mu*_0...mu*_{n-1} != 1")],
        )
        if tau == 1:
            report.add("lem.rot_gamma(5)", m == n, f"m={m} but n={n}")
        _check(
            report,
            "lemma.rot_desc(1)",
            ((root_exponent(mu[i] * mus[i], lam, r) is not None, f"mu_{i} mu*_{i} is not a power of lambda") for i in range(n)),
        )
        if all(not g.is_zero() for g in gamma):
            xi = [gamma[(i + 1) % n] / gamma[i] for i in range(n)]
            _check(
                report,
                "lemma.rot_desc(2a)",
                itertools.chain(
                    ((xi[i] ** m == one, f"xi_{i} is not an m-th root of unity") for i in range(n)),
                    ((xi[i] == xi[i % tau], f"xi_{i} != xi_{i % tau}") for i in range(n)),
                ),
            )
            _check(
                report,
                "lemma.rot_desc(2b)",
                ((orbit_prod(mu, k, kappa) == xi[k] ** r, f"zeta_{k} != xi_{k}^r") for k in range(tau)),
            )
            _check(
                report,
                "lemma.rot_desc(2c)",
                (
                    (_prod((xi[(k + t) % n] for t in range(tau)), L) ** (r * d // n) == spec.lam_inv, f"xi product at {k}")
                    for k in range(tau)
                ),
            )

    # lem.rot_cmu
    if unstar or star:
        cu, cst = rotation_sigma_cmu(n, d, lam, mu, mus, c[0], cs[0])

        def cmu():
            for i in range(n):
                yield cu[i] == c[i], f"c_{i} != lambda^{i} mu_1...mu_{i} c"
                yield cst[i] == cs[i], f"c*_{i} != (lambda^{i} mu*_0...mu*_{i - 1})^-1 c*"
            if c[0]:
                yield _prod(mu, L) == one, "c != 0 but mu_0...mu_{n-1} != 1"
            if cs[0]:
                yield _prod(mus, L) == one, "c* != 0 but mu*_0...mu*_{n-1} != 1"
            if c[0] or cs[0]:
                for i in range(n):
                    yield mu[i] * mus[i] == spec.lam_inv, f"mu_{i} mu*_{i} != lambda^-1"
                if n % 2 or d % 2:
                    yield m == math.lcm(r, n), f"m={m} != lcm(r, n)"

        _check(report, "lem.rot_cmu", cmu())

    # remark after lem.rot_gamma
    if n % 2 and (d == n - 2 or d == 2):

        def remark():
            for table, lead, other in ((c, "c", unstar == "a*"), (cs, "c*", star == "a")):
                if not other:
                    continue
                yield bool(table[0]) or all(v.is_zero() for v in table), f"{lead}_0 = 0 but some {lead}_i != 0"
                if table[0] and n % r == 0:
                    yield _prod(mu, L) == _prod(mus, L), "mu-product != mu*-product"

        _check(report, "remark.rot_gamma", remark())

    if n4d2:
        _n4d2_checks(spec, report, c, cs)


def _n4d2_checks(spec: ActionSpec, report: ConstraintReport, c, cs) -> None:
    n, L = 4, spec.L
    mu, mus, gamma = spec.mu, spec.mu_star, spec.gamma
    one = spec.one()
    arrows = [Arrow(i, s) for i in range(n) for s in (False, True)]
    sig_r_zero = all(sigma_power(spec, a, spec.r).is_zero() for a in arrows)
    all_zero = all(g.is_zero() for g in gamma)
    branch2 = (
        all(not g.is_zero() for g in gamma)
        and _prod(mu, L) == one
        and _prod(mus, L) == one
        and gamma[1] ** 2 == mu[0] * mu[2] * gamma[0] ** 2
    )
    report.add("lem.n4d2", sig_r_zero == (all_zero or branch2), "sigma^r = 0 does not match the two stated branches")
    if sig_r_zero:
        _check(
            report,
            "prop.n4d2(I)",
            itertools.chain(
                ((sigma_power(spec, a, 2).is_zero(), f"sigma^2({a}) != 0") for a in arrows),
                [(c[0].is_zero() or cs[0].is_zero(), "c and c* both nonzero")],
            ),
        )
    if not sigma_power(spec, Arrow(0, False), 2).is_zero():
        sign = lambda i: CycNum.rational(L, (-1) ** i)  # noqa: E731

        def part2():
            yield spec.r == 2, "r != 2"
            yield all(not g.is_zero() for g in gamma), "some gamma_i = 0"
            yield all(v for v in list(c) + list(cs)), "some c_i or c*_i = 0"
            yield _prod(mu, L) == one and _prod(mus, L) == one, "mu or mu* product != 1"
            yield all(mu[i] * mus[i] == -one for i in range(n)), "mu_i mu*_i != -1"
            yield mu[0] * mu[2] == mus[1] * mus[3], "mu_0 mu_2 != mu*_1 mu*_3"
            yield gamma[1] ** 2 == gamma[0] ** 2 * mu[0] * mu[2] - mu[3].inv() * c[0] * cs[0], "gamma_1^2 relation"
            for i in range(n):
                yield c[i] == sign(i) * _prod(mu[1 : i + 1], L) * c[0], f"c_{i} alternating form"
                yield cs[i] == sign(i) * _prod(mus[:i], L).inv() * cs[0], f"c*_{i} alternating form"

        _check(report, "prop.n4d2(II)", part2())


def _reflection_checks(spec: ActionSpec, report: ConstraintReport) -> None:
    n, d, L = spec.n, spec.d, spec.L
    lam, mu, mus, gamma = spec.lam, spec.mu, spec.mu_star, spec.gamma
    one = spec.one()
    J, K = fixed_vertices(n, d), swapped_vertices(n, d)
    mirror = lambda i: (n - (d + i + 1)) % n  # noqa: E731
    active = {(j - 1) % n for j in J} | set(J) | set(K)
    cj = {j: _coef(_sigma(spec, j, False), _aw(j - 1, True, n), L) for j in J}
    cjs = {j: _coef(_sigma(spec, j, True), _aw(j, True, n), L) for j in J}
    ck = {k: _coef(_sigma(spec, k, False), PathWord(k), L) for k in K}
    cks = {k: _coef(_sigma(spec, k, True), PathWord((k + 1) % n), L) for k in K}
    el = lambda w, v: _single(n, w, v) if v else FreeElement(n)  # noqa: E731
    all_mumu = lambda: all(mu[i] * mus[i] == one for i in range(n))  # noqa: E731

    def refl_sigma():
        for i in range(n):
            if i not in active:
                yield _sigma(spec, i, False).is_zero() and _sigma(spec, i, True).is_zero(), f"sigma nonzero at a{i}"
        for j in J:
            jm = (j - 1) % n
            yield _sigma(spec, jm, False) == el(_aw(jm, False, n), -cjs[j]), f"sigma(a{jm}) shape"
            yield _sigma(spec, jm, True) == el(_aw(j, False, n), -mu[j].inv() * mus[jm] * cj[j]), f"sigma(a{jm}*) shape"
            yield _sigma(spec, j, False) == el(_aw(jm, True, n), cj[j]), f"sigma(a{j}) shape"
            yield _sigma(spec, j, True) == el(_aw(j, True, n), cjs[j]), f"sigma(a{j}*) shape"
            if cj[j] or cjs[j]:
                yield lam * lam == one, "c_j != 0 but lambda^2 != 1"
        for k in K:
            yield _sigma(spec, k, False) == el(PathWord(k), ck[k]), f"sigma(a{k}) shape"
            yield _sigma(spec, k, True) == el(PathWord((k + 1) % n), lam * mus[k] * ck[k]), f"sigma(a{k}*) shape"
            if ck[k]:
                yield lam * lam * mu[k] * mus[k] == one, "c_k != 0 but lambda^2 mu_k mu*_k != 1"

    _check(report, "lem.refl_sigma", refl_sigma())

    blocked = {(j - 1) % n for j in J} | set(J)

    def refl_gam():
        for j in J:
            jm = (j - 1) % n
            yield cj[j] ** 2 == mu[j] / mus[jm] * gamma[jm] ** 2, f"c_{j}^2 relation"
            yield cjs[j] ** 2 == mus[j] * mu[jm] * gamma[jm] ** 2, f"c*_{j}^2 relation"
        for i in range(n):
            if i in blocked:
                continue
            nxt = gamma[(i + 1) % n] ** 2
            yield nxt == mu[i] * mus[mirror(i)] * gamma[i] ** 2, f"gamma({i + 1})^2 via mu_{i} mu*"
            yield nxt == (mus[i] * mu[mirror(i)]).inv() * gamma[i] ** 2, f"gamma({i + 1})^2 via mu*_{i} mu"
        moving = [i for i in range(n) if spec.g_vertex(i) != i]
        yield all(g.is_zero() for g in gamma) or all(gamma[i] for i in moving), "gamma vanishes at a moving vertex"

    _check(report, "lem.refl_gam", refl_gam())

    def refl_quot():
        for j in J:
            yield cjs[j] == -mu[j].inv() * cj[j], f"c*_{j} != -mu_{j}^-1 c_{j}"
            if cj[j]:
                yield all_mumu(), "c_j != 0 but some mu_i mu*_i != 1"
        for k in K:
            yield ck[k] == -mu[k] * cks[k], f"c_{k} != -mu_{k} c*_{k}"
            if ck[k]:
                yield lam == -one, "c_k != 0 but lambda != -1"
                yield all_mumu(), "c_k != 0 but some mu_i mu*_i != 1"

    _check(report, "lem.refl_quot", refl_quot())

    faithful = is_inner_faithful(spec)
    if faithful:
        _check(report, "lem.refl_faithful", [(spec.r == 2, f"r={spec.r}"), (all_mumu(), "some mu_i mu*_i != 1")])

        def thm1():
            for i in range(n):
                yield mus[i] == mu[i].inv(), f"mu*_{i} != mu_{i}^-1"
            if spec.m % 2:
                yield False, "m is odd"
                return
            for i in range(n):
                yield (mu[i] / mu[mirror(i)]) ** (spec.m // 2) == one, f"(mu_{i}/mu_{mirror(i)})^(m/2) != 1"

        _check(report, "thm.refl(1)", thm1())

        def thm2():
            for i in range(n):
                yield gamma[i] == -gamma[spec.g_vertex(i)], f"gamma({i}) != -gamma(g.{i})"
            for i in range(n):
                if i not in blocked:
                    yield gamma[(i + 1) % n] ** 2 == mu[i] / mu[mirror(i)] * gamma[i] ** 2, f"gamma({i + 1})^2 relation"

        _check(report, "thm.refl(2)", thm2())

        def thm3():
            for j in J:
                jm = (j - 1) % n
                yield cj[j] ** 2 == gamma[jm] ** 2 * mu[j] * mu[jm], f"c_{j}^2 != gamma^2 mu_j mu_(j-1)"
                yield _sigma(spec, jm, False) == el(_aw(jm, False, n), mu[j].inv() * cj[j]), f"sigma(a{jm})"
                yield _sigma(spec, jm, True) == el(_aw(j, False, n), -(mu[j] * mu[jm]).inv() * cj[j]), f"sigma(a{jm}*)"
                yield _sigma(spec, j, True) == el(_aw(j, True, n), -mu[j].inv() * cj[j]), f"sigma(a{j}*)"
            for k in K:
                yield _sigma(spec, k, True) == el(PathWord((k + 1) % n), -mu[k].inv() * ck[k]), f"sigma(a{k}*)"
            if all(g.is_zero() for g in gamma):
                yield any(ck[k] for k in K), "gamma = 0 and every c_k = 0"

        _check(report, "thm.refl(3)", thm3())


def check_necessary(spec: ActionSpec) -> ConstraintReport:
    """Every applicable necessary condition, one named entry each."""
    report = ConstraintReport()
    _common_checks(spec, report)
    if spec.kind == ROTATION and spec.d != 0:
        _rotation_checks(spec, report)
    elif spec.kind == REFLECTION:
        _reflection_checks(spec, report)
    return report


# ---------------------------------------------------------------------------
# exhaustive enumeration


@dataclass
class EnumerationResult:
    specs: list[ActionSpec] = field(default_factory=list)
    violations: list[tuple[ActionSpec, ConstraintReport]] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)
    entry_totals: dict[str, list[int]] = field(default_factory=dict)

    @property
    def certified(self) -> bool:
        return not self.violations

    def summary_lines(self) -> list[str]:
        lines = [f"{k}: {v}" for k, v in self.counts.items()]
        for name, (passed, total) in sorted(self.entry_totals.items()):
            lines.append(f"{'PASS' if passed == total else 'FAIL'}  {name}  {passed}/{total}")
        lines.append(f"classification violations: {len(self.violations)}")
        return lines


def _roots(order: int, L: int) -> list[CycNum]:
    return [zeta(L, j * (L // order)) for j in range(order)]


def _arrow_orbits(spec: ActionSpec) -> list[list[Arrow]]:
    seen, out = set(), []
    for a in (Arrow(i, s) for i in range(spec.n) for s in (False, True)):
        if a in seen:
            continue
        orb, b = [], a
        while b not in seen:
            seen.add(b)
            orb.append(b)
            b = spec.g_arrow(b)[1]
        out.append(orb)
    return out


def _slots(spec: ActionSpec, a: Arrow) -> list[PathWord]:
    """Paths of degree <= 1 allowed in sigma(a) by (sigma2)."""
    n = spec.n
    s, t = a.source(n), spec.g_vertex(a.target(n))
    out = [PathWord(s)] if s == t else []
    for b in (Arrow(i, st) for i in range(n) for st in (False, True)):
        if b.source(n) == s and b.target(n) == t:
            out.append(arrow_word(b, n))
    return out


def _gamma_choices(spec: ActionSpec, seeds: Sequence[CycNum], free_values: Sequence[CycNum]) -> Iterator[list[CycNum]]:
    """Gamma tables obeying the vertex relation along g-orbits; the first free orbit takes a seed."""
    zero = spec.zero()
    orbits = spec.orbits()
    free = [o for o in orbits if len(o) == spec.r]
    options = [seeds] + [free_values] * (len(free) - 1) if free else []
    for values in itertools.product(*options):
        gamma = [zero] * spec.n
        for orb, v in zip(free, values):
            g = v
            for i in orb:
                gamma[i] = g
                g = g * spec.lam_inv
        yield gamma


def _orbit_images(spec: ActionSpec, orbit: list[Arrow], values: Sequence[CycNum]) -> list[dict[Arrow, FreeElement]]:
    """sigma on one arrow orbit: a choice on the first arrow spread by (sigma3), kept if it closes up."""
    n = spec.n
    slots = _slots(spec, orbit[0])
    out = []
    for coeffs in itertools.product(values, repeat=len(slots)):
        img = FreeElement.from_terms(n, zip(slots, coeffs))
        table: dict[Arrow, FreeElement] = {}
        a = orbit[0]
        for _ in orbit:
            if img:
                table[a] = img
            c, b = spec.g_arrow(a)
            img = act_g(spec, img).scale(spec.lam_inv / c)
            a = b
        if img == table.get(orbit[0], FreeElement(n)):
            out.append(table)
    return out


def _sigma_options(spec: ActionSpec, values: Sequence[CycNum]) -> list[list[dict[Arrow, FreeElement]]]:
    return [_orbit_images(spec, orb, values) for orb in _arrow_orbits(spec)]


def _sigma_choices(options: list[list[dict[Arrow, FreeElement]]]) -> Iterator[SigmaTable]:
    for parts in itertools.product(*options):
        entries: dict[Arrow, FreeElement] = {}
        for part in parts:
            entries.update(part)
        yield SigmaTable(entries)


def _canonical_key(spec: ActionSpec) -> tuple:
    scale = next((g for g in spec.gamma if g), None)
    inv = scale.inv() if scale is not None else spec.one()
    sigma = tuple(
        sorted((a.code(), tuple(sorted((str(w), c * inv) for w, c in e.terms.items()))) for a, e in spec.sigma.entries.items())
    )
    return (str(spec.taft.lam), spec.d, spec.mu, spec.mu_star, tuple(g * inv for g in spec.gamma), sigma)


def _normalized(spec: ActionSpec) -> ActionSpec:
    scale = next((g for g in spec.gamma if g), None)
    if scale is None or scale == spec.one():
        return spec
    inv = scale.inv()
    sigma = SigmaTable({a: e.scale(inv) for a, e in spec.sigma.entries.items()})
    return spec.with_changes(gamma=tuple(g * inv for g in spec.gamma), sigma=sigma)


def enumerate_actions(
    n: int,
    r: int,
    m: int,
    kind: str = ROTATION,
    grid_order: int | None = None,
    *,
    d_values: Sequence[int] | None = None,
    gamma_seeds: Sequence = (0, 1),
    sigma_values: Sequence | None = None,
    L: int = 0,
    budget: int = 2_000_000,
    D: int = 2,
    certify_degree: int | None = None,
    on_progress: Callable[[str], None] | None = None,
) -> EnumerationResult:
    """Brute-force every grid point, keep the verified inner-faithful actions, audit them.

    mu and mu^* range over all ``grid_order``-th roots of unity (default m), lambda over
    all primitive r-th roots, gamma along orbits from the vertex relation, and sigma
    over ``sigma_values`` on each (sigma2) slot of one arrow per g-orbit.  Candidates
    are screened at degree ``D`` and survivors re-verified at ``certify_degree``
    (default 2n) before the necessary conditions are audited.
    """
    check_n(n)
    grid_order = grid_order or m
    L = L or math.lcm(m, n, 4, grid_order)
    mu_grid = _roots(grid_order, L)
    sig_vals = [_cyc(v, L) for v in sigma_values] if sigma_values is not None else [CycNum.zero(L)] + mu_grid
    seeds = [_cyc(v, L) for v in gamma_seeds]
    free_vals = [CycNum.zero(L)] + _roots(L, L)
    lams = [RootOfUnity(r, e) for e in range(1, r) if math.gcd(e, r) == 1]
    d_values = list(range(n)) if d_values is None else list(d_values)
    ones = [CycNum.one(L)] * n
    result = EnumerationResult()
    counts = dict.fromkeys(
        ["mu tables", "after eq.mu_rel", "candidates", "after structure", "verified", "inner faithful", "valid (dedup)"], 0
    )

    # planning pass: mu tables pruned by eq.mu_rel, sigma pruned orbit-wise by (sigma3)
    plan = []
    for lam in lams:
        taft = TaftData(r, m, lam)
        for d in d_values:
            shell = ActionSpec(taft, n, kind, d, ones, ones, [CycNum.zero(L)] * n, SigmaTable(), L)
            n_gamma = sum(1 for _ in _gamma_choices(shell, seeds, free_vals))
            for mu in itertools.product(mu_grid, repeat=n):
                for mus in itertools.product(mu_grid, repeat=n):
                    counts["mu tables"] += 1
                    if any(mu[i] * mus[i] != mu[0] * mus[0] for i in range(1, n)):
                        continue
                    counts["after eq.mu_rel"] += 1
                    base = shell.with_changes(mu=mu, mu_star=mus)
                    options = _sigma_options(base, sig_vals)
                    size = n_gamma * math.prod(len(o) for o in options)
                    counts["candidates"] += size
                    if counts["candidates"] > budget:
                        raise BudgetExceeded(f"more than {budget} candidates after pruning")
                    if size:
                        plan.append((base, options))

    seen = set()
    for base, options in plan:
        for gamma in _gamma_choices(base, seeds, free_vals):
            with_gamma = base.with_changes(gamma=gamma)
            for sigma in _sigma_choices(options):
                spec = with_gamma.with_changes(sigma=sigma)
                if not verify_structure(spec).passed:
                    continue
                counts["after structure"] += 1
                if not (verify_module_algebra(spec, D).passed and verify_hopf_relations(spec, D).passed):
                    continue
                counts["verified"] += 1
                if not is_inner_faithful(spec):
                    continue
                counts["inner faithful"] += 1
                spec = _normalized(spec)
                key = _canonical_key(spec)
                if key in seen:
                    continue
                seen.add(key)
                result.specs.append(spec)
    if on_progress:
        on_progress(f"{len(result.specs)} valid actions")

    certify_degree = certify_degree or 2 * n
    if certify_degree > D:
        result.specs = [
            s
            for s in result.specs
            if verify_module_algebra(s, certify_degree).passed and verify_hopf_relations(s, certify_degree).passed
        ]
    counts["valid (dedup)"] = len(result.specs)
    for spec in result.specs:
        report = check_necessary(spec)
        for e in report.entries:
            tally = result.entry_totals.setdefault(e.name, [0, 0])
            tally[0] += e.passed
            tally[1] += 1
        if not report.passed:
            result.violations.append((spec, report))
    result.counts = counts
    return result
