"""Invariants of rotation actions: character-weighted orbits, the x-action on them, and the centre.

For a rotation action with sigma = 0 and r = m, the sums

    phi_alpha(p) = sum_{i<r} lambda^{-alpha i} g^i(p)

are g-eigenvectors with eigenvalue lambda^alpha, and x maps phi_alpha(p) to a
multiple of phi_{alpha+1}(p).  The multiple is gamma_k (lambda^W - lambda^alpha),
where W is the weight of p: the log base lambda of gamma_{t(p)} / gamma_{s(p)}.
The generic kernel solver in ``invariant_basis`` is authoritative; the orbit
description is a cross-checked prediction.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .action import ROTATION, ActionSpec, ConstraintReport, act_g, act_x, verify_structure
from .errors import HypothesisViolation
from .linalg import nullspace, rank, row_reduce, reduce_vector
from .preprojective import NormalPath, PiElement, center_basis, pi_basis
from .scalars import CycNum, root_exponent

__all__ = [
    "WeightTable",
    "InvariantBasis",
    "hypothesis_status",
    "require_hypothesis",
    "weight_table",
    "phi",
    "x_on_phi",
    "phi_product",
    "phi_product_pairs",
    "invariant_basis",
    "predicted_invariants",
    "compare_invariants_center",
    "verify_invariant_prediction",
    "degree0_dimension",
    "span_equal",
    "span_contains",
]


def hypothesis_status(spec: ActionSpec) -> tuple[bool, str]:
    """Whether the closed forms apply: rotation, d > 0, r = m, sigma = 0, every gamma nonzero."""
    if spec.kind != ROTATION or spec.d == 0:
        return False, "g is not a nontrivial rotation"
    if spec.r != spec.m:
        return False, f"r={spec.r} differs from m={spec.m}"
    if not spec.sigma.is_zero():
        return False, "sigma is nonzero"
    if any(g.is_zero() for g in spec.gamma):
        return False, "some gamma_i vanishes"
    if not verify_structure(spec).passed:
        return False, "structural checks fail"
    return True, ""


def require_hypothesis(spec: ActionSpec) -> None:
    ok, why = hypothesis_status(spec)
    if not ok:
        raise HypothesisViolation(f"closed forms need a sigma-free rotation action with r = m: {why}")


@dataclass(frozen=True)
class WeightTable:
    """w_k with gamma_{k+1} = lambda^{w_k} gamma_k, as residues mod r."""

    w: tuple[int, ...]
    r: int
    d: int

    @property
    def n(self) -> int:
        return len(self.w)

    def weight(self, k: int, u: int, v: int) -> int:
        """Weight of p_k(u, v): forward steps add w, backward steps subtract it."""
        n = self.n
        fwd = sum(self.w[(k + i) % n] for i in range(u))
        back = sum(self.w[(k + u - 1 - j) % n] for j in range(v))
        return (fwd - back) % self.r

    def consistency(self) -> list[tuple[bool, str]]:
        """Forward d-paths weigh -1, backward d-paths weigh +1, and w is constant on g-orbits."""
        n, d, r = self.n, self.d, self.r
        out = []
        for k in range(n):
            out.append((self.weight(k, d, 0) == r - 1, f"w_{k}(d,0) != -1"))
            # gamma_{k-d} = lambda gamma_k, so the backward path carries +1
            out.append((self.weight(k, 0, d) == 1 % r, f"weight of the backward d-path at {k} != +1"))
            out.append((self.w[k] == self.w[(k + d) % n], f"w_{k} != w_{(k + d) % n}"))
        return out


def weight_table(spec: ActionSpec) -> WeightTable:
    require_hypothesis(spec)
    n = spec.n
    w = []
    for k in range(n):
        e = root_exponent(spec.gamma[(k + 1) % n] / spec.gamma[k], spec.lam, spec.r)
        if e is None:
            raise HypothesisViolation(f"gamma_{k + 1}/gamma_{k} is not a power of lambda")
        w.append(e)
    return WeightTable(tuple(w), spec.r, spec.d)


def phi(spec: ActionSpec, alpha: int, p: NormalPath | PiElement) -> PiElement:
    """sum_{i<r} lambda^{-alpha i} g^i(p), reduced in Pi_Q."""
    if spec.kind != ROTATION:
        raise HypothesisViolation("character-weighted orbits are defined for rotation actions")
    term = p if isinstance(p, PiElement) else PiElement.path(p, spec.n, spec.one())
    weight = spec.lam_inv**alpha
    coeff = spec.one()
    out = PiElement(spec.n)
    for _ in range(spec.r):
        out = out + term.scale(coeff)
        term = act_g(spec, term)
        coeff = coeff * weight
    return out


def x_on_phi(spec: ActionSpec, alpha: int, p: NormalPath) -> tuple[CycNum, int]:
    """(c, alpha+1) with x . phi_alpha(p) = c phi_{alpha+1}(p)."""
    table = weight_table(spec)
    k, u, v = p
    W = table.weight(k, u, v)
    return spec.gamma[k % spec.n] * (spec.lam**W - spec.lam**alpha), (alpha + 1) % spec.r


def phi_product(spec: ActionSpec, alpha: int, beta: int, p: NormalPath, q: NormalPath) -> tuple[bool, PiElement, PiElement]:
    """Compare phi_alpha(p) phi_beta(q) with lambda^{(v-u) beta} phi_{alpha+beta}(p_k(u+u', v+v'))."""
    require_hypothesis(spec)
    if p.k != q.k:
        raise ValueError("both paths must start at the same vertex")
    lhs = phi(spec, alpha, p) * phi(spec, beta, q)
    joined = NormalPath(p.k, p.u + q.u, p.v + q.v)
    rhs = phi(spec, alpha + beta, joined).scale(spec.lam ** ((p.v - p.u) * beta))
    return lhs == rhs, lhs, rhs


def phi_product_pairs(n: int, max_degree: int, minimum: int = 1):
    """(p, q) sharing a start vertex with every u, v, u', v' >= minimum and total degree <= max_degree."""
    for k in range(n):
        for u, v, u2, v2 in itertools.product(range(minimum, max_degree + 1), repeat=4):
            if u + v + u2 + v2 <= max_degree:
                yield NormalPath(k, u, v), NormalPath(k, u2, v2)


# ---------------------------------------------------------------------------
# spans


def _rows(elems: list[PiElement]) -> tuple[list[dict[int, CycNum]], dict[NormalPath, int]]:
    index: dict[NormalPath, int] = {}
    rows = []
    for e in elems:
        row = {}
        for p, c in e.terms.items():
            row[index.setdefault(p, len(index))] = c
        rows.append(row)
    return rows, index


def span_contains(big: list[PiElement], small: list[PiElement]) -> bool:
    """Every element of ``small`` lies in the linear span of ``big``."""
    rows, index = _rows(list(big) + list(small))
    nb = len(big)
    reduced, pivots = row_reduce(rows[:nb])
    return all(not reduce_vector(reduced, pivots, r) for r in rows[nb:])


def span_equal(a: list[PiElement], b: list[PiElement]) -> bool:
    return span_contains(a, b) and span_contains(b, a)


def _dim(elems: list[PiElement]) -> int:
    return rank(_rows(elems)[0]) if elems else 0


# ---------------------------------------------------------------------------
# invariant rings


@dataclass
class InvariantBasis:
    """Per-degree spanning sets of the homogeneous invariants."""

    degrees: list[list[PiElement]]

    def dims(self) -> list[int]:
        return [len(b) for b in self.degrees]

    def __getitem__(self, ell: int) -> list[PiElement]:
        return self.degrees[ell]


def _invariants_in_degree(spec: ActionSpec, ell: int) -> list[PiElement]:
    n, L = spec.n, spec.L
    basis = pi_basis(n, ell)
    rows: dict[tuple, dict[int, CycNum]] = {}
    for j, b in enumerate(basis):
        elem = PiElement.path(b, n, spec.one())
        for tag, image in (("g", act_g(spec, elem) - elem), ("x", act_x(spec, elem))):
            for p, c in image.terms.items():
                rows.setdefault((tag, p), {})[j] = c
    kernel = nullspace(list(rows.values()), len(basis), L)
    return [PiElement(n, {basis[j]: c for j, c in enumerate(vec) if c}) for vec in kernel]


def invariant_basis(spec: ActionSpec, D: int | None = None) -> InvariantBasis:
    """Kernel of (g - id, x) on each homogeneous component up to degree D (default 2n).

    With sigma nonzero, x only respects the filtration, and this returns the homogeneous
    invariants.
    """
    D = 2 * spec.n if D is None else D
    return InvariantBasis([_invariants_in_degree(spec, ell) for ell in range(D + 1)])


def predicted_invariants(spec: ActionSpec, ell: int) -> list[PiElement]:
    """phi_0(p_k(u,v)) over all k with u + v = ell and weight 0 mod r."""
    table = weight_table(spec)
    out = []
    for p in pi_basis(spec.n, ell):
        if table.weight(*p) == 0:
            e = phi(spec, 0, p)
            if e:
                out.append(e)
    return out


def degree0_dimension(spec: ActionSpec) -> int:
    return len(_invariants_in_degree(spec, 0))


def _generated(gens: list[PiElement], D: int, n: int) -> list[list[PiElement]]:
    """Per-degree spanning sets of the subalgebra generated by homogeneous ``gens`` up to degree D."""
    layers: list[list[PiElement]] = [[] for _ in range(D + 1)]
    layers[0].append(PiElement.unit(n))
    graded = [(max(g.degrees()), g) for g in gens if g and max(g.degrees()) > 0]
    for ell in range(1, D + 1):
        for deg, g in graded:
            if deg <= ell:
                layers[ell].extend(x * g for x in layers[ell - deg])
        layers[ell] = [x for x in layers[ell] if x]
    return layers


def compare_invariants_center(spec: ActionSpec, D: int | None = None) -> ConstraintReport:
    """Per-degree invariants against the centre, plus the four-element generating set."""
    n = spec.n
    D = 2 * n if D is None else D
    report = ConstraintReport()
    ok, why = hypothesis_status(spec)
    if not ok:
        report.tags.append(f"no paper claim: {why}")
    elif math.gcd(spec.d, n) != 1:
        report.tags.append("no paper claim: gcd(d, n) > 1")
    inv = invariant_basis(spec, D)
    cen = center_basis(n, D, spec.L)
    for ell in range(D + 1):
        a, b = inv[ell], cen[ell]
        report.add(f"dim[{ell}]", len(a) == len(b), f"invariants {len(a)} vs centre {len(b)}")
        report.add(f"centre<=inv[{ell}]", span_contains(a, b), "a centre element is not invariant")
        report.add(f"inv<=centre[{ell}]", span_contains(b, a), "an invariant is not central")
    if ok and math.gcd(spec.d, n) == 1:
        gens = [phi(spec, 0, NormalPath(0, n, 0)), phi(spec, 0, NormalPath(0, 0, n)), phi(spec, 0, NormalPath(0, 1, 1))]
        layers = _generated(gens, D, n)
        for ell in range(D + 1):
            report.add(
                f"generated[{ell}]",
                _dim(layers[ell]) == len(inv[ell]) and span_contains(layers[ell], inv[ell]),
                f"generators span {_dim(layers[ell])} of {len(inv[ell])} invariant dimensions",
            )
    return report


def verify_invariant_prediction(spec: ActionSpec, D: int | None = None) -> ConstraintReport:
    """Weights, the eigenvalue law, and kernel = orbit prediction in each degree."""
    require_hypothesis(spec)
    n, r = spec.n, spec.r
    D = 2 * n if D is None else D
    report = ConstraintReport()
    table = weight_table(spec)
    _record(report, "weights", table.consistency())
    _record(
        report,
        "zeta=1",
        ((spec.gamma[(k + 1) % n] ** r == spec.gamma[k] ** r, f"gamma_{k + 1}^r != gamma_{k}^r") for k in range(n)),
    )
    _record(
        report,
        "g-eigen",
        (
            (act_g(spec, phi(spec, a, p)) == phi(spec, a, p).scale(spec.lam**a), f"alpha={a} {p}")
            for ell in range(D + 1)
            for p in pi_basis(n, ell)
            for a in range(r)
        ),
    )
    inv = invariant_basis(spec, D)
    for ell in range(D + 1):
        report.add(f"orbits[{ell}]", span_equal(inv[ell], predicted_invariants(spec, ell)), f"degree {ell} kernel differs")
    return report


def _record(report: ConstraintReport, name: str, conditions) -> None:
    for good, witness in conditions:
        if not good:
            report.add(name, False, witness)
            return
    report.add(name, True)
