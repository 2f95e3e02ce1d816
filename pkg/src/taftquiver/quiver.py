"""Path algebra of the doubled cyclic quiver of type A~ with n vertices.

Arrows are ``a_i: i -> i+1`` and ``a_i^*: i+1 -> i`` (indices mod n).  Paths
compose left to right: ``pq`` is defined when the target of ``p`` is the
source of ``q``.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple

from .errors import SizeMismatch
from .scalars import CycNum

__all__ = [
    "Arrow",
    "PathWord",
    "FreeElement",
    "compose",
    "free_mul",
    "graded_basis",
    "trivial",
    "arrow_word",
    "check_n",
]


def check_n(n: int) -> int:
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"the quiver needs n >= 3 vertices, got {n!r}")
    return n


class Arrow(NamedTuple):
    index: int
    starred: bool = False

    def source(self, n: int) -> int:
        return (self.index + 1) % n if self.starred else self.index % n

    def target(self, n: int) -> int:
        return self.index % n if self.starred else (self.index + 1) % n

    def code(self) -> int:
        return 2 * self.index + int(self.starred)

    @classmethod
    def from_code(cls, code: int) -> Arrow:
        return cls(code >> 1, bool(code & 1))

    def __str__(self):
        return f"a{self.index}{'*' if self.starred else ''}"


class PathWord(NamedTuple):
    """A composable word of arrows starting at ``start``; no arrows means e_start."""

    start: int
    arrows: tuple[Arrow, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    def source(self, n: int) -> int:
        return self.start % n

    def target(self, n: int) -> int:
        return self.arrows[-1].target(n) if self.arrows else self.start % n

    def is_composable(self, n: int) -> bool:
        v = self.start % n
        for a in self.arrows:
            if a.source(n) != v:
                return False
            v = a.target(n)
        return True

    def __str__(self):
        if not self.arrows:
            return f"e{self.start}"
        return ".".join(str(a) for a in self.arrows)

    _ARROW = re.compile(r"^a(\d+)(\*?)$")

    @classmethod
    def parse(cls, text: str, n: int) -> PathWord:
        text = text.strip()
        if re.fullmatch(r"e\d+", text):
            v = int(text[1:])
            if v >= n:
                raise ValueError(f"vertex {v} out of range for n={n}")
            return cls(v)
        arrows = []
        for part in text.split("."):
            m = cls._ARROW.match(part.strip())
            if not m or int(m.group(1)) >= n:
                raise ValueError(f"bad arrow {part!r} in path {text!r}")
            arrows.append(Arrow(int(m.group(1)), bool(m.group(2))))
        word = cls(arrows[0].source(n), tuple(arrows))
        if not word.is_composable(n):
            raise ValueError(f"path {text!r} is not composable")
        return word


def trivial(i: int, n: int) -> PathWord:
    return PathWord(i % n)


def arrow_word(a: Arrow, n: int) -> PathWord:
    return PathWord(a.source(n), (a,))


def compose(p: PathWord, q: PathWord, n: int) -> PathWord | None:
    """Concatenation ``pq``, or None (the zero path) when t(p) != s(q)."""
    if p.target(n) != q.source(n):
        return None
    if not p.arrows:
        return q
    return PathWord(p.start, p.arrows + q.arrows)


def _word_key(w: PathWord):
    return (len(w.arrows), w.start, tuple((a.starred, a.index) for a in w.arrows))


class FreeElement:
    """Finite linear combination of paths in kQ-bar with cyclotomic coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[PathWord, CycNum] | None = None):
        self.n = n
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def from_terms(cls, n: int, pairs: Iterable[tuple[PathWord, CycNum]]) -> FreeElement:
        out: dict[PathWord, CycNum] = {}
        for w, c in pairs:
            out[w] = out[w] + c if w in out else c
        return cls(n, out)

    @classmethod
    def word(cls, w: PathWord, n: int, coeff=None) -> FreeElement:
        return cls(n, {w: coeff if coeff is not None else CycNum.one(1)})

    def _same(self, other: FreeElement):
        if self.n != other.n:
            raise SizeMismatch(f"quiver sizes differ: {self.n} vs {other.n}")

    def __add__(self, other: FreeElement) -> FreeElement:
        self._same(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return FreeElement(self.n, out)

    def __neg__(self):
        return FreeElement(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: FreeElement) -> FreeElement:
        return self + (-other)

    def scale(self, c) -> FreeElement:
        return FreeElement(self.n, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, FreeElement):
            return free_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def homogeneous_part(self, degree: int) -> FreeElement:
        return FreeElement(self.n, {w: c for w, c in self.terms.items() if len(w.arrows) == degree})

    def degrees(self) -> set[int]:
        return {len(w.arrows) for w in self.terms}

    def sorted_terms(self) -> list[tuple[PathWord, CycNum]]:
        return sorted(self.terms.items(), key=lambda t: _word_key(t[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{w}" for w, c in self.sorted_terms())


def free_mul(x: FreeElement, y: FreeElement) -> FreeElement:
    if x.n != y.n:
        raise SizeMismatch(f"quiver sizes differ: {x.n} vs {y.n}")
    n = x.n
    out: dict[PathWord, CycNum] = {}
    for p, c in x.terms.items():
        tp = p.target(n)
        for q, d in y.terms.items():
            if q.start != tp:
                continue
            w = compose(p, q, n)
            v = c * d
            out[w] = out[w] + v if w in out else v
    return FreeElement(n, out)


def graded_basis(n: int, length: int) -> list[PathWord]:
    """All composable words of the given length, ordered by start vertex then arrow flags."""
    check_n(n)
    if length < 0:
        raise ValueError("length must be non-negative")
    words = []
    for v in range(n):
        partial = [PathWord(v)]
        for _ in range(length):
            nxt = []
            for w in partial:
                t = w.target(n)
                # out of t: a_t (unstarred) then a_{t-1}^* (starred)
                nxt.append(PathWord(w.start, w.arrows + (Arrow(t, False),)))
                nxt.append(PathWord(w.start, w.arrows + (Arrow((t - 1) % n, True),)))
            partial = nxt
        words.extend(partial)
    return words
