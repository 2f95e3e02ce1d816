"""The preprojective algebra Pi_Q = kQ-bar / (Omega) of type A~.

The relations ``a_i^* a_i = a_{i+1} a_{i+1}^*`` are oriented left to right,
pushing starred arrows rightward.  The system terminates and is confluent;
its normal forms are the paths

    p_k(u, v) = a_k a_{k+1} ... a_{k+u-1} . a_{k+u-1}^* ... a_{k+u-v}^*

with source k and target k+u-v (mod n).  Every relation is monic on both
sides, so a word always reduces to a single normal path with coefficient 1.
"""

from __future__ import annotations

import functools
import re
from typing import Iterable, NamedTuple

from . import kernels
from .errors import SizeMismatch
from .linalg import nullspace
from .quiver import Arrow, FreeElement, PathWord, check_n
from .scalars import CycNum

__all__ = [
    "NormalPath",
    "PiElement",
    "normal_form",
    "reduce",
    "pi_mul",
    "pi_basis",
    "omega",
    "word_of",
    "rewrite_sites",
    "rewrite_at",
    "normal_form_by",
    "random_word",
    "center_basis",
    "generators",
]


class NormalPath(NamedTuple):
    k: int
    u: int
    v: int

    @property
    def degree(self) -> int:
        return self.u + self.v

    def source(self, n: int) -> int:
        return self.k % n

    def target(self, n: int) -> int:
        return (self.k + self.u - self.v) % n

    def __str__(self):
        return f"p({self.k},{self.u},{self.v})"

    _PATTERN = re.compile(r"^\s*p\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")

    @classmethod
    def parse(cls, text: str, n: int) -> NormalPath:
        m = cls._PATTERN.match(text)
        if not m:
            raise ValueError(f"not a normal path: {text!r}")
        k, u, v = (int(g) for g in m.groups())
        if k >= n:
            raise ValueError(f"vertex {k} out of range for n={n}")
        return cls(k, u, v)


def word_of(p: NormalPath, n: int) -> PathWord:
    """The word in kQ-bar representing p_k(u, v)."""
    k, u, v = p
    arrows = tuple(Arrow((k + i) % n, False) for i in range(u))
    arrows += tuple(Arrow((k + u - 1 - j) % n, True) for j in range(v))
    return PathWord(k % n, arrows)


def rewrite_sites(word: PathWord) -> list[int]:
    """Positions i where arrows[i] is starred and arrows[i+1] is not."""
    a = word.arrows
    return [i for i in range(len(a) - 1) if a[i].starred and not a[i + 1].starred]


def rewrite_at(word: PathWord, pos: int, n: int) -> PathWord:
    """Apply a_i^* a_i -> a_{i+1} a_{i+1}^* at position ``pos``."""
    a = list(word.arrows)
    i = a[pos].index
    if not (a[pos].starred and not a[pos + 1].starred and a[pos + 1].index == i):
        raise ValueError(f"no rewrite site at position {pos} of {word}")
    j = (i + 1) % n
    a[pos], a[pos + 1] = Arrow(j, False), Arrow(j, True)
    return PathWord(word.start, tuple(a))


def normal_form_by(word: PathWord, n: int, choose) -> NormalPath:
    """Rewrite one site at a time, ``choose(sites)`` picking which; any choice reaches the same form."""
    while True:
        sites = rewrite_sites(word)
        if not sites:
            break
        word = rewrite_at(word, choose(sites), n)
    arrows = word.arrows
    u = next((i for i, a in enumerate(arrows) if a.starred), len(arrows))
    return NormalPath(word.start % n, u, len(arrows) - u)


def random_word(n: int, length: int, rng) -> PathWord:
    """A uniformly random composable word: each step takes a_t or a_{t-1}^* out of the current vertex."""
    start = rng.randrange(n)
    arrows, t = [], start
    for _ in range(length):
        a = Arrow(t, False) if rng.random() < 0.5 else Arrow((t - 1) % n, True)
        arrows.append(a)
        t = a.target(n)
    return PathWord(start, tuple(arrows))


def _normal_from_codes(start: int, codes: list[int], n: int) -> NormalPath:
    out = kernels.rewrite_normal(codes, n)
    u = 0
    while u < len(out) and not out[u] & 1:
        u += 1
    if any(not c & 1 for c in out[u:]):
        raise AssertionError("rewriting stopped before reaching a normal form")
    return NormalPath(start % n, u, len(out) - u)


def normal_form(word: PathWord, n: int) -> NormalPath:
    """Normal form p_k(u, v) of a composable word."""
    return _normal_from_codes(word.start, [a.code() for a in word.arrows], n)


@functools.lru_cache(maxsize=1 << 16)
def _path_product(p: NormalPath, q: NormalPath, n: int) -> NormalPath | None:
    if p.target(n) != q.k % n:
        return None
    codes = [a.code() for a in word_of(p, n).arrows] + [a.code() for a in word_of(q, n).arrows]
    return _normal_from_codes(p.k, codes, n)


class PiElement:
    """Linear combination of normal paths: an element of Pi_Q."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[NormalPath, CycNum] | None = None):
        self.n = n
        self.terms = {p: c for p, c in (terms or {}).items() if c}

    @classmethod
    def path(cls, p: NormalPath, n: int, coeff=None) -> PiElement:
        return cls(n, {p: coeff if coeff is not None else CycNum.one(1)})

    @classmethod
    def from_terms(cls, n: int, pairs: Iterable[tuple[NormalPath, CycNum]]) -> PiElement:
        out: dict[NormalPath, CycNum] = {}
        for p, c in pairs:
            out[p] = out[p] + c if p in out else c
        return cls(n, out)

    @classmethod
    def zero(cls, n: int) -> PiElement:
        return cls(n)

    @classmethod
    def unit(cls, n: int) -> PiElement:
        return cls(n, {NormalPath(i, 0, 0): CycNum.one(1) for i in range(n)})

    def _same(self, other):
        if self.n != other.n:
            raise SizeMismatch(f"quiver sizes differ: {self.n} vs {other.n}")

    def __add__(self, other: PiElement) -> PiElement:
        self._same(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out[p] + c if p in out else c
        return PiElement(self.n, out)

    def __neg__(self):
        return PiElement(self.n, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other: PiElement) -> PiElement:
        return self + (-other)

    def scale(self, c) -> PiElement:
        return PiElement(self.n, {p: c * v for p, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, PiElement):
            return pi_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, PiElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def homogeneous_part(self, degree: int) -> PiElement:
        return PiElement(self.n, {p: c for p, c in self.terms.items() if p.degree == degree})

    def degrees(self) -> set[int]:
        return {p.degree for p in self.terms}

    def sorted_terms(self) -> list[tuple[NormalPath, CycNum]]:
        return sorted(self.terms.items(), key=lambda t: (t[0].degree, t[0].k, -t[0].u))

    def to_json(self) -> list:
        return [[str(p), c.to_json()] for p, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data, n: int, L: int) -> PiElement:
        from .scalars import parse_scalar

        return cls.from_terms(n, ((NormalPath.parse(p, n), parse_scalar(c, L)) for p, c in data))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{p}" for p, c in self.sorted_terms())


def pi_mul(x: PiElement, y: PiElement) -> PiElement:
    """Product in Pi_Q: concatenate representatives, then rewrite to normal form."""
    if x.n != y.n:
        raise SizeMismatch(f"quiver sizes differ: {x.n} vs {y.n}")
    n = x.n
    out: dict[NormalPath, CycNum] = {}
    for p, c in x.terms.items():
        for q, d in y.terms.items():
            r = _path_product(p, q, n)
            if r is None:
                continue
            v = c * d
            out[r] = out[r] + v if r in out else v
    return PiElement(n, out)


def reduce(x: FreeElement) -> PiElement:
    """Image of a kQ-bar element in Pi_Q."""
    out: dict[NormalPath, CycNum] = {}
    for w, c in x.terms.items():
        p = normal_form(w, x.n)
        out[p] = out[p] + c if p in out else c
    return PiElement(x.n, out)


def pi_basis(n: int, degree: int) -> list[NormalPath]:
    """The n(degree+1) normal paths of the given degree, ordered by k then decreasing u."""
    check_n(n)
    if degree < 0:
        raise ValueError("degree must be non-negative")
    return [NormalPath(k, u, degree - u) for k in range(n) for u in range(degree, -1, -1)]


def omega(i: int, n: int) -> FreeElement:
    """The relation a_i^* a_i - a_{i+1} a_{i+1}^* at vertex i+1."""
    one = CycNum.one(1)
    i %= n
    j = (i + 1) % n
    left = PathWord(j, (Arrow(i, True), Arrow(i, False)))
    right = PathWord(j, (Arrow(j, False), Arrow(j, True)))
    return FreeElement(n, {left: one, right: -one})


def generators(n: int) -> list[PiElement]:
    """e_i, a_i and a_i^* as elements of Pi_Q."""
    gens = [PiElement.path(NormalPath(i, 0, 0), n) for i in range(n)]
    gens += [PiElement.path(NormalPath(i, 1, 0), n) for i in range(n)]
    # a_i^* = p_{i+1}(0, 1)
    gens += [PiElement.path(NormalPath((i + 1) % n, 0, 1), n) for i in range(n)]
    return gens


def _center_degree(n: int, degree: int, L: int) -> list[PiElement]:
    basis = pi_basis(n, degree)
    gens = generators(n)
    rows: dict[tuple, dict[int, CycNum]] = {}
    for j, b in enumerate(basis):
        zb = PiElement.path(b, n, CycNum.one(L))
        for gi, g in enumerate(gens):
            comm = zb * g - g * zb
            for p, c in comm.terms.items():
                rows.setdefault((gi, p), {})[j] = c
    kernel = nullspace(list(rows.values()), len(basis), L)
    return [PiElement(n, {basis[j]: c for j, c in enumerate(vec) if c}) for vec in kernel]


def center_basis(n: int, max_degree: int, L: int = 1) -> list[list[PiElement]]:
    """Per-degree bases of the centre of Pi_Q up to ``max_degree``, by a centralizer solve."""
    check_n(n)
    return [_center_degree(n, ell, L) for ell in range(max_degree + 1)]
