"""Taft algebra actions on kQ-bar and Pi_Q, given by generator-level data.

An action of T_lambda(r, m) = <g, x | gx - lambda xg, g^m - 1, x^r> is fixed by

* a quiver automorphism: rotation ``g.e_i = e_{i+d}`` or reflection
  ``g.e_i = e_{n-(d+i)}``, scaled on arrows by ``mu`` and ``mu_star``;
* vertex scalars ``gamma`` with ``x.e_i = gamma_i e_i - gamma_i lambda^-1 e_{g.i}``;
* a table ``sigma`` so that ``x.a = gamma_{t(a)} a - gamma_{s(a)} lambda^-1 g.a + sigma(a)``.

``x`` is (1, g)-skew primitive, so on longer paths
``x.(pq) = p (x.q) + (x.p)(g.q)``; we always split a path as (first arrow)(rest).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Iterable, Union

from .preprojective import NormalPath, PiElement, omega, pi_basis, pi_mul, reduce, word_of
from .quiver import Arrow, FreeElement, PathWord, arrow_word, check_n, free_mul
from .scalars import CycNum, RootOfUnity, is_primitive_root

__all__ = [
    "TaftData",
    "SigmaTable",
    "ActionSpec",
    "CheckEntry",
    "ConstraintReport",
    "act_g",
    "act_x",
    "sigma_power",
    "verify_structure",
    "verify_hopf_relations",
    "verify_module_algebra",
    "verify_action",
    "is_inner_faithful",
    "ROTATION",
    "REFLECTION",
]

ROTATION = "rotation"
REFLECTION = "reflection"

Element = Union[FreeElement, PiElement]


@dataclass(frozen=True)
class TaftData:
    """Parameters (r, m, lambda) of the generalized Taft algebra."""

    r: int
    m: int
    lam: RootOfUnity

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"r must exceed 1, got {self.r}")
        if self.m < 1 or self.m % self.r:
            raise ValueError(f"m={self.m} must be a positive multiple of r={self.r}")
        if not is_primitive_root(self.lam.to_cyc(), self.r):
            raise ValueError(f"{self.lam} is not a primitive {self.r}-th root of unity")

    @classmethod
    def standard(cls, r: int, m: int) -> TaftData:
        return cls(r, m, RootOfUnity(r, 1))


@dataclass(frozen=True, eq=False)
class SigmaTable:
    """sigma on arrows; vertices are absent because sigma vanishes there."""

    entries: dict[Arrow, FreeElement] = field(default_factory=dict)

    def __post_init__(self):
        clean = {a: e for a, e in self.entries.items() if not e.is_zero()}
        object.__setattr__(self, "entries", clean)

    def image(self, a: Arrow, n: int) -> FreeElement:
        return self.entries.get(a, FreeElement(n))

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, SigmaTable):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))


def _as_cyc(values: Iterable, L: int, name: str, n: int) -> tuple[CycNum, ...]:
    out = []
    for v in values:
        c = v if isinstance(v, CycNum) else CycNum.rational(L, v)
        if L % c.order:
            raise ValueError(f"{name} entry {c} does not embed into Q(zeta_{L})")
        out.append(c.embed(L) if c.order != L else c)
    if len(out) != n:
        raise ValueError(f"{name} needs {n} entries, got {len(out)}")
    return tuple(out)


@dataclass(frozen=True, eq=False)
class ActionSpec:
    """Complete generator-level description of a T_lambda(r, m)-action on Pi_Q."""

    taft: TaftData
    n: int
    kind: str
    d: int
    mu: tuple[CycNum, ...]
    mu_star: tuple[CycNum, ...]
    gamma: tuple[CycNum, ...]
    sigma: SigmaTable = field(default_factory=SigmaTable)
    L: int = 0

    def __post_init__(self):
        check_n(self.n)
        if self.kind not in (ROTATION, REFLECTION):
            raise ValueError(f"kind must be rotation or reflection, got {self.kind!r}")
        if not 0 <= self.d < self.n:
            raise ValueError(f"d must lie in [0, {self.n}), got {self.d}")
        L = self.L or math.lcm(self.taft.m, self.n, 4)
        if L % self.taft.lam.order:
            raise ValueError(f"lambda={self.taft.lam} does not live in Q(zeta_{L})")
        object.__setattr__(self, "L", L)
        for name in ("mu", "mu_star", "gamma"):
            object.__setattr__(self, name, _as_cyc(getattr(self, name), L, name, self.n))
        for name in ("mu", "mu_star"):
            if any(c.is_zero() for c in getattr(self, name)):
                raise ValueError(f"{name} entries must be nonzero")
        for a in self.sigma.entries:
            if not (isinstance(a, Arrow) and 0 <= a.index < self.n):
                raise ValueError(f"sigma key {a!r} is not an arrow of the quiver")

    # derived data ---------------------------------------------------------
    @functools.cached_property
    def lam(self) -> CycNum:
        return self.taft.lam.to_cyc(self.L)

    @functools.cached_property
    def lam_inv(self) -> CycNum:
        return self.lam.inv()

    @property
    def r(self) -> int:
        return self.taft.r

    @property
    def m(self) -> int:
        return self.taft.m

    @property
    def tau(self) -> int:
        return math.gcd(self.n, self.d)

    @property
    def kappa(self) -> int:
        return self.n // self.tau

    def one(self) -> CycNum:
        return CycNum.one(self.L)

    def zero(self) -> CycNum:
        return CycNum.zero(self.L)

    def g_vertex(self, i: int) -> int:
        if self.kind == ROTATION:
            return (i + self.d) % self.n
        return (self.n - (self.d + i)) % self.n

    def g_arrow(self, a: Arrow) -> tuple[CycNum, Arrow]:
        c = self.mu_star[a.index] if a.starred else self.mu[a.index]
        if self.kind == ROTATION:
            return c, Arrow((a.index + self.d) % self.n, a.starred)
        return c, Arrow((self.n - (self.d + a.index + 1)) % self.n, not a.starred)

    def orbits(self) -> list[list[int]]:
        seen, out = set(), []
        for i in range(self.n):
            if i in seen:
                continue
            orb, j = [], i
            while j not in seen:
                seen.add(j)
                orb.append(j)
                j = self.g_vertex(j)
            out.append(orb)
        return out

    def with_changes(self, **changes) -> ActionSpec:
        data = {f: getattr(self, f) for f in ("taft", "n", "kind", "d", "mu", "mu_star", "gamma", "sigma", "L")}
        data.update(changes)
        return ActionSpec(**data)

    # memo tables for the operators; filled lazily
    @functools.cached_property
    def _memo(self) -> dict:
        return {"g_word": {}, "x_word": {}, "g_pi": {}, "x_pi": {}}


# ---------------------------------------------------------------------------
# the g action


def _g_word(spec: ActionSpec, w: PathWord) -> tuple[CycNum, PathWord]:
    memo = spec._memo["g_word"]
    hit = memo.get(w)
    if hit is None:
        coeff = spec.one()
        arrows = []
        for a in w.arrows:
            c, b = spec.g_arrow(a)
            coeff = coeff * c
            arrows.append(b)
        hit = memo[w] = (coeff, PathWord(spec.g_vertex(w.start), tuple(arrows)))
    return hit


def _g_pi(spec: ActionSpec, p: NormalPath) -> PiElement:
    memo = spec._memo["g_pi"]
    hit = memo.get(p)
    if hit is None:
        c, w = _g_word(spec, word_of(p, spec.n))
        hit = memo[p] = reduce(FreeElement.word(w, spec.n, c))
    return hit


def act_g(spec: ActionSpec, x: Element) -> Element:
    """The algebra automorphism g, applied linearly."""
    if isinstance(x, PiElement):
        out = PiElement(spec.n)
        for p, c in x.terms.items():
            out = out + _g_pi(spec, p).scale(c)
        return out
    terms = {}
    for w, c in x.terms.items():
        gc, gw = _g_word(spec, w)
        v = c * gc
        terms[gw] = terms[gw] + v if gw in terms else v
    return FreeElement(x.n, terms)


# ---------------------------------------------------------------------------
# the x action


def _x_vertex(spec: ActionSpec, i: int) -> FreeElement:
    g = spec.gamma[i]
    return FreeElement.from_terms(
        spec.n, [(PathWord(i), g), (PathWord(spec.g_vertex(i)), -g * spec.lam_inv)]
    )


def _x_arrow(spec: ActionSpec, a: Arrow) -> FreeElement:
    n = spec.n
    c, b = spec.g_arrow(a)
    own = FreeElement.from_terms(
        n,
        [
            (arrow_word(a, n), spec.gamma[a.target(n)]),
            (arrow_word(b, n), -spec.gamma[a.source(n)] * spec.lam_inv * c),
        ],
    )
    return own + spec.sigma.image(a, n)


def _x_word(spec: ActionSpec, w: PathWord) -> FreeElement:
    memo = spec._memo["x_word"]
    hit = memo.get(w)
    if hit is not None:
        return hit
    n = spec.n
    if not w.arrows:
        hit = _x_vertex(spec, w.start)
    elif len(w.arrows) == 1:
        hit = _x_arrow(spec, w.arrows[0])
    else:
        first = arrow_word(w.arrows[0], n)
        rest = PathWord(w.arrows[1].source(n), w.arrows[1:])
        gc, gw = _g_word(spec, rest)
        hit = free_mul(FreeElement.word(first, n, spec.one()), _x_word(spec, rest)) + free_mul(
            _x_arrow(spec, w.arrows[0]), FreeElement.word(gw, n, gc)
        )
    memo[w] = hit
    return hit


def _rest(p: NormalPath, n: int) -> tuple[Arrow, NormalPath]:
    k, u, v = p
    if u:
        return Arrow(k, False), NormalPath((k + 1) % n, u - 1, v)
    return Arrow((k - 1) % n, True), NormalPath((k - 1) % n, 0, v - 1)


def _x_pi(spec: ActionSpec, p: NormalPath) -> PiElement:
    memo = spec._memo["x_pi"]
    hit = memo.get(p)
    if hit is not None:
        return hit
    n = spec.n
    if p.degree <= 1:
        hit = reduce(_x_word(spec, word_of(p, n)))
    else:
        a, q = _rest(p, n)
        first = PiElement.path(NormalPath(a.source(n), 0, 1) if a.starred else NormalPath(a.index, 1, 0), n, spec.one())
        x_first = reduce(_x_arrow(spec, a))
        hit = pi_mul(first, _x_pi(spec, q)) + pi_mul(x_first, _g_pi(spec, q))
    memo[p] = hit
    return hit


def act_x(spec: ActionSpec, x: Element) -> Element:
    """x via the generator rules and the skew-Leibniz rule; reduced on Pi_Q."""
    if isinstance(x, PiElement):
        out = PiElement(spec.n)
        for p, c in x.terms.items():
            out = out + _x_pi(spec, p).scale(c)
        return out
    out = FreeElement(x.n)
    for w, c in x.terms.items():
        out = out + _x_word(spec, w).scale(c)
    return out


def sigma_power(spec: ActionSpec, a: Arrow, k: int) -> FreeElement:
    """sigma^k(a), extending sigma linearly to degree <= 1 with sigma(e_i) = 0."""
    n = spec.n
    cur = FreeElement.word(arrow_word(a, n), n, spec.one())
    for _ in range(k):
        nxt = FreeElement(n)
        for w, c in cur.terms.items():
            if len(w.arrows) == 1:
                nxt = nxt + spec.sigma.image(w.arrows[0], n).scale(c)
        cur = nxt
    return cur


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class CheckEntry:
    name: str
    passed: bool
    witness: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  witness: {self.witness}" if self.witness else ""
        return f"{status}  {self.name}{tail}"


@dataclass
class ConstraintReport:
    """Named check results; failed entries always carry a witness."""

    entries: list[CheckEntry] = field(default_factory=list)
    tags: list[str] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: str | None = None) -> None:
        if not passed and not witness:
            raise ValueError(f"failed check {name!r} needs a witness")
        self.entries.append(CheckEntry(name, bool(passed), None if passed else witness))

    def extend(self, other: ConstraintReport) -> ConstraintReport:
        self.entries.extend(other.entries)
        self.tags.extend(t for t in other.tags if t not in self.tags)
        return self

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def __bool__(self):
        return self.passed

    def failures(self) -> list[CheckEntry]:
        return [e for e in self.entries if not e.passed]

    def get(self, name: str) -> CheckEntry | None:
        return next((e for e in self.entries if e.name == name), None)

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def lines(self) -> list[str]:
        return [e.line() for e in self.entries]

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "tags": list(self.tags),
            "entries": [{"name": e.name, "passed": e.passed, "witness": e.witness} for e in self.entries],
        }


def _first_failure(items, test):
    for item in items:
        if not test(item):
            return item
    return None


def _record(report: ConstraintReport, name: str, items, test, show=str) -> None:
    bad = _first_failure(items, test)
    report.add(name, bad is None, None if bad is None else show(bad))


# ---------------------------------------------------------------------------
# structural checks on generator data


def verify_structure(spec: ActionSpec) -> ConstraintReport:
    """Generator-level axioms: vertex action, sigma laws, sigma^r law, g^m on the quiver."""
    n, lam_inv = spec.n, spec.lam_inv
    report = ConstraintReport()
    arrows = [Arrow(i, s) for i in range(n) for s in (False, True)]

    _record(
        report,
        "vertact.gamma",
        range(n),
        lambda i: spec.gamma[spec.g_vertex(i)] == lam_inv * spec.gamma[i],
        lambda i: f"gamma({spec.g_vertex(i)}) != lambda^-1 gamma({i})",
    )
    orbits = spec.orbits()
    all_zero = all(c.is_zero() for c in spec.gamma)
    _record(
        report,
        "vertact.orbit",
        orbits,
        lambda o: all_zero or all(spec.gamma[i].is_zero() for i in o) or len(o) == spec.r,
        lambda o: f"orbit {o} has size {len(o)} != r with gamma nonzero",
    )

    def g_power(a: Arrow, k: int) -> tuple[CycNum, Arrow]:
        c = spec.one()
        for _ in range(k):
            e, a = spec.g_arrow(a)
            c = c * e
        return c, a

    _record(
        report,
        "g^m.quiver",
        arrows,
        lambda a: g_power(a, spec.m) == (spec.one(), a),
        lambda a: f"g^m({a}) != {a}",
    )

    def deg_ok(a):
        return spec.sigma.image(a, n).degrees() <= {0, 1}

    _record(report, "sigma.degree", arrows, deg_ok, lambda a: f"sigma({a}) has degree > 1")

    def sigma2(a):
        target = spec.g_vertex(a.target(n))
        return all(w.source(n) == a.source(n) and w.target(n) == target for w in spec.sigma.image(a, n).terms)

    _record(report, "sigma2", arrows, sigma2, lambda a: f"sigma({a}) leaves e_s(a) . e_(g.t(a))")

    def sigma3(a):
        c, b = spec.g_arrow(a)
        return spec.sigma.image(b, n).scale(c) == act_g(spec, spec.sigma.image(a, n)).scale(lam_inv)

    _record(report, "sigma3", arrows, sigma3, lambda a: f"sigma(g.{a}) != lambda^-1 g.sigma({a})")

    def gam_sig(a):
        r = spec.r
        c, b = g_power(a, r)
        lhs = FreeElement.from_terms(
            n,
            [
                (arrow_word(b, n), spec.gamma[a.source(n)] ** r * c),
                (arrow_word(a, n), -(spec.gamma[a.target(n)] ** r)),
            ],
        )
        return lhs == sigma_power(spec, a, r)

    _record(report, "eq.gam_sig", arrows, gam_sig, lambda a: f"gamma/sigma^r relation at {a}")
    return report


# ---------------------------------------------------------------------------
# operator checks on Pi_Q


def _basis_upto(n: int, D: int) -> list[NormalPath]:
    return [p for ell in range(D + 1) for p in pi_basis(n, ell)]


def _power(op, spec, x, k):
    for _ in range(k):
        x = op(spec, x)
    return x


def verify_hopf_relations(spec: ActionSpec, D: int | None = None) -> ConstraintReport:
    """g^m = id, x^r = 0 and g x = lambda x g on every basis path of degree <= D."""
    D = 2 * spec.n if D is None else D
    report = ConstraintReport()
    basis = _basis_upto(spec.n, D)

    def elem(p):
        return PiElement.path(p, spec.n, spec.one())

    show = lambda p: str(word_of(p, spec.n))  # noqa: E731
    _record(report, "g^m-1", basis, lambda p: _power(act_g, spec, elem(p), spec.m) == elem(p), show)
    _record(report, "x^r", basis, lambda p: _power(act_x, spec, elem(p), spec.r).is_zero(), show)
    _record(
        report,
        "gx-lambda*xg",
        basis,
        lambda p: act_g(spec, act_x(spec, elem(p))) == act_x(spec, act_g(spec, elem(p))).scale(spec.lam),
        show,
    )
    return report


def verify_module_algebra(spec: ActionSpec, D: int | None = None) -> ConstraintReport:
    """Multiplicativity of g, skew-Leibniz for x on Pi_Q pairs, and descent through Omega."""
    n = spec.n
    D = 2 * n if D is None else D
    report = ConstraintReport()
    one = spec.one()
    paths = _basis_upto(n, D)
    pairs = [(p, q) for p in paths for q in paths if p.degree + q.degree <= D]

    def el(p):
        return PiElement.path(p, n, one)

    def g_mult(pq):
        p, q = pq
        return act_g(spec, el(p) * el(q)) == act_g(spec, el(p)) * act_g(spec, el(q))

    def x_leibniz(pq):
        p, q = pq
        lhs = act_x(spec, el(p) * el(q))
        rhs = el(p) * act_x(spec, el(q)) + act_x(spec, el(p)) * act_g(spec, el(q))
        return lhs == rhs

    show = lambda pq: f"({word_of(pq[0], n)})*({word_of(pq[1], n)})"  # noqa: E731
    _record(report, "leibniz.g", pairs, g_mult, show)
    _record(report, "leibniz.x", pairs, x_leibniz, show)

    idx = list(range(n))
    omegas = {i: omega(i, n) for i in idx}
    name = lambda i: f"Omega({i})"  # noqa: E731
    _record(report, "descent.g", idx, lambda i: reduce(act_g(spec, omegas[i])).is_zero(), name)
    _record(report, "descent.x", idx, lambda i: reduce(act_x(spec, omegas[i])).is_zero(), name)
    _record(
        report,
        "eq.mu_rel",
        idx,
        lambda i: spec.mu[i] * spec.mu_star[i] == spec.mu[(i + 1) % n] * spec.mu_star[(i + 1) % n],
        name,
    )
    _record(report, "eq.sigrel", idx, lambda i: sigma_relation(spec, i).is_zero(), name)
    return report


def sigma_relation(spec: ActionSpec, i: int) -> PiElement:
    """The sigma part of x.Omega_i, reduced in Pi_Q."""
    n = spec.n
    one = spec.one()
    j = (i + 1) % n

    def term(first: Arrow, second: Arrow) -> FreeElement:
        c, gs = spec.g_arrow(second)
        left = free_mul(FreeElement.word(arrow_word(first, n), n, one), spec.sigma.image(second, n))
        right = free_mul(spec.sigma.image(first, n), FreeElement.word(arrow_word(gs, n), n, c))
        return left + right

    return reduce(term(Arrow(i, True), Arrow(i, False)) - term(Arrow(j, False), Arrow(j, True)))


def is_inner_faithful(spec: ActionSpec) -> bool:
    """True iff x acts nonzero on some path of degree <= 1."""
    return any(
        not act_x(spec, PiElement.path(p, spec.n, spec.one())).is_zero() for p in _basis_upto(spec.n, 1)
    )


def verify_action(spec: ActionSpec, D: int | None = None) -> ConstraintReport:
    """Structure, module-algebra and Hopf checks combined."""
    report = verify_structure(spec)
    report.extend(verify_module_algebra(spec, D))
    report.extend(verify_hopf_relations(spec, D))
    return report
