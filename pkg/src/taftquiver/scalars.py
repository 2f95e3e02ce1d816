"""Exact arithmetic in cyclotomic fields Q(zeta_L).

An element is stored as integer numerators over one positive common
denominator, reduced modulo the L-th cyclotomic polynomial.  Equality is
therefore a comparison of canonical tuples.

>>> z = zeta(3)
>>> z + z**2 + 1 == 0
True
>>> (1 / (1 + zeta(5))) * (1 + zeta(5)) == 1
True
"""

from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import DivisionByZero, SquareRootNotInField
from .kernels import mulmod

__all__ = [
    "CycNum",
    "RootOfUnity",
    "cyclotomic_polynomial",
    "totient",
    "zeta",
    "cyc_make",
    "cyc_arith",
    "is_primitive_root",
    "root_exponent",
    "cyc_sqrt",
    "parse_scalar",
]


def _divisors(L: int) -> list[int]:
    return [d for d in range(1, L + 1) if L % d == 0]


def _exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num):
        raise ArithmeticError("inexact cyclotomic division")
    return q


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(L: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_L, constant term first."""
    if L < 1:
        raise ValueError(f"cyclotomic order must be positive, got {L}")
    num = [-1] + [0] * (L - 1) + [1]
    for d in _divisors(L)[:-1]:
        num = _exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


def totient(L: int) -> int:
    return len(cyclotomic_polynomial(L)) - 1


class _Field:
    """Per-order tables: fold rows for multiplication and powers of zeta."""

    def __init__(self, L: int):
        self.order = L
        phi_poly = cyclotomic_polynomial(L)
        phi = len(phi_poly) - 1
        self.phi = phi
        self.modulus = phi_poly
        powers = []
        cur = [1] + [0] * (phi - 1)
        top = max(L, 2 * phi - 1)
        for _ in range(top):
            powers.append(tuple(cur))
            # multiply by x, fold the x**phi coefficient back
            carry = cur[-1]
            cur = [0] + cur[:-1]
            if carry:
                for t in range(phi):
                    cur[t] -= carry * phi_poly[t]
        self.powers = powers
        self.fold = tuple(powers[phi + j] for j in range(phi - 1))
        # normalized trace Tr(zeta**j)/phi; invariant under field embeddings
        self.trace = tuple(Fraction(_ramanujan_sum(L, j), phi) for j in range(phi))


def _ramanujan_sum(L: int, j: int) -> int:
    # Tr(zeta_L**j) over Q
    return sum(_mobius(L // d) * d for d in _divisors(math.gcd(L, j)))


def _mobius(k: int) -> int:
    result = 1
    p = 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            result = -result
        p += 1
    if k > 1:
        result = -result
    return result


@functools.lru_cache(maxsize=None)
def _field(L: int) -> _Field:
    return _Field(L)


class CycNum:
    """An exact element of Q(zeta_L), canonical modulo Phi_L.

    ``CycNum(L, coeffs)`` accepts a polynomial in zeta_L of any length with
    rational coefficients and reduces it.
    """

    __slots__ = ("order", "_num", "_den", "_hash")

    def __init__(self, order: int, coeffs=()):
        f = _field(order)
        fracs = [Fraction(c) for c in coeffs]
        den = 1
        for c in fracs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [0] * f.phi
        for j, c in enumerate(fracs):
            k = c.numerator * (den // c.denominator)
            if k:
                row = f.powers[j % order]
                for t in range(f.phi):
                    if row[t]:
                        nums[t] += k * row[t]
        self._set(order, nums, den)

    def _set(self, order, nums, den):
        g = den
        for x in nums:
            if x:
                g = math.gcd(g, x)
                if g == 1:
                    break
        if not any(nums):
            nums, den = [0] * len(nums), 1
        elif g != 1:
            nums = [x // g for x in nums]
            den //= g
        self.order = order
        self._num = tuple(nums)
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, order, nums, den):
        obj = cls.__new__(cls)
        if den < 0:
            nums = [-x for x in nums]
            den = -den
        obj._set(order, nums, den)
        return obj

    # constructors -----------------------------------------------------
    @classmethod
    def rational(cls, L: int, q) -> CycNum:
        q = Fraction(q)
        phi = _field(L).phi
        return cls._raw(L, [q.numerator] + [0] * (phi - 1), q.denominator)

    @classmethod
    def zero(cls, L: int) -> CycNum:
        return cls.rational(L, 0)

    @classmethod
    def one(cls, L: int) -> CycNum:
        return cls.rational(L, 1)

    # views -------------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self._den) for x in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self):
        return any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def sort_key(self) -> tuple[Fraction, ...]:
        return self.coeffs

    # coercion ------------------------------------------------------------
    def embed(self, M: int) -> CycNum:
        """Image in Q(zeta_M) for a multiple M of the current order."""
        if M == self.order:
            return self
        if M % self.order:
            raise ValueError(f"cannot embed Q(zeta_{self.order}) into Q(zeta_{M})")
        step = M // self.order
        f = _field(M)
        nums = [0] * f.phi
        for j, c in enumerate(self._num):
            if c:
                row = f.powers[(j * step) % M]
                for t in range(f.phi):
                    if row[t]:
                        nums[t] += c * row[t]
        return CycNum._raw(M, nums, self._den)

    def galois(self, k: int) -> CycNum:
        """Apply the automorphism zeta -> zeta**k (k coprime to the order)."""
        L = self.order
        if math.gcd(k, L) != 1:
            raise ValueError(f"{k} is not a unit modulo {L}")
        f = _field(L)
        nums = [0] * f.phi
        for j, c in enumerate(self._num):
            if c:
                row = f.powers[(j * k) % L]
                for t in range(f.phi):
                    if row[t]:
                        nums[t] += c * row[t]
        return CycNum._raw(L, nums, self._den)

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.order == self.order:
                return self, other
            M = self.order * other.order // math.gcd(self.order, other.order)
            return self.embed(M), other.embed(M)
        if isinstance(other, (int, Rational)):
            return self, CycNum.rational(self.order, other)
        return None, None

    # arithmetic ----------------------------------------------------------
    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        if a._den == b._den:
            return CycNum._raw(a.order, [x + y for x, y in zip(a._num, b._num)], a._den)
        return CycNum._raw(
            a.order,
            [x * b._den + y * a._den for x, y in zip(a._num, b._num)],
            a._den * b._den,
        )

    __radd__ = __add__

    def __neg__(self):
        return CycNum._raw(self.order, [-x for x in self._num], self._den)

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b + (-a)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return CycNum._raw(self.order, [x * other for x in self._num], self._den)
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        if a.is_zero() or b.is_zero():
            return CycNum.zero(a.order)
        nums = mulmod(a._num, b._num, _field(a.order).fold)
        return CycNum._raw(a.order, nums, a._den * b._den)

    __rmul__ = __mul__

    def inv(self) -> CycNum:
        if self.is_zero():
            raise DivisionByZero("inverse of zero in a cyclotomic field")
        return _inverse(self.order, tuple(self._num), self._den)

    def __truediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b.inv()

    def __rtruediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b * a.inv()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base, e = self.inv(), -e
        result = CycNum.one(self.order)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # comparison ----------------------------------------------------------
    def __eq__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a._num == b._num and a._den == b._den

    def __hash__(self):
        if self._hash is None:
            tr = _field(self.order).trace
            self._hash = hash(sum(Fraction(x) * t for x, t in zip(self._num, tr) if x) / self._den)
        return self._hash

    # text ------------------------------------------------------------------
    def __repr__(self):
        return f"CycNum({self.order}, [{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if j == 0 else (f"z{self.order}" if j == 1 else f"z{self.order}^{j}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> dict:
        """Serializable form: order plus canonical coefficients as ``"p/q"`` strings."""
        return {"L": self.order, "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> CycNum:
        L = int(data["L"])
        coeffs = [Fraction(s) for s in data["coeffs"]]
        if len(coeffs) != totient(L):
            raise ValueError(f"expected {totient(L)} coefficients for L={L}, got {len(coeffs)}")
        out = cls(L, coeffs)
        if out.coeffs != tuple(coeffs):
            raise ValueError("coefficients are not in canonical form")
        return out


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] -= c * bi
        a.pop()
        _poly_trim(a)
    return _poly_trim(q), a


def _poly_sub_mul(s0, q, s1):
    # s0 - q*s1
    out = [Fraction(0)] * max(len(s0), len(q) + len(s1) - 1 if q and s1 else 0)
    for i, c in enumerate(s0):
        out[i] += c
    for i, qi in enumerate(q):
        for j, sj in enumerate(s1):
            out[i + j] -= qi * sj
    return _poly_trim(out)


@functools.lru_cache(maxsize=4096)
def _inverse(L: int, num: tuple[int, ...], den: int) -> CycNum:
    # keyed on the raw representation: equal values of different orders must not share a cache slot
    # extended Euclid against Phi_L; invariant s_i * a == r_i (mod Phi_L)
    a = CycNum._raw(L, list(num), den)
    r0 = [Fraction(c) for c in cyclotomic_polynomial(L)]
    r1 = _poly_trim(list(a.coeffs))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub_mul(s0, q, s1)
    if not r1:
        raise DivisionByZero(f"{a} is not invertible")
    c = r1[0]
    return CycNum(L, [x / c for x in s1])


# ---------------------------------------------------------------------------
# roots of unity


def zeta(L: int, j: int = 1) -> CycNum:
    """The canonical form of zeta_L**j."""
    return cyc_make(L, j)


def cyc_make(L: int, j: int) -> CycNum:
    if L < 1:
        raise ValueError(f"L must be positive, got {L}")
    f = _field(L)
    return CycNum._raw(L, list(f.powers[j % L]), 1)


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "neg": lambda a, b: -a,
    "inv": lambda a, b: a.inv(),
    "pow": lambda a, b: a**b,
}


def cyc_arith(op: str, a: CycNum, b=None) -> CycNum:
    """Dispatch one of add, sub, mul, neg, inv, pow by name."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(a, b)


def is_primitive_root(a: CycNum, r: int) -> bool:
    """True iff a**r == 1 and no smaller positive power is 1."""
    if r < 1:
        return False
    power = CycNum.one(a.order)
    for s in range(1, r + 1):
        power = power * a
        if power == 1:
            return s == r
    return False


def root_exponent(value: CycNum, base: CycNum, r: int) -> int | None:
    """Smallest w in [0, r) with base**w == value, or None."""
    power = CycNum.one(base.order)
    for w in range(r):
        if power == value:
            return w
        power = power * base
    return None


@dataclass(frozen=True)
class RootOfUnity:
    """zeta_order ** exponent, with the exponent kept modulo the order."""

    order: int
    exponent: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"order must be positive, got {self.order}")
        object.__setattr__(self, "exponent", self.exponent % self.order)

    def primitive_order(self) -> int:
        return self.order // math.gcd(self.order, self.exponent)

    def to_cyc(self, L: int | None = None) -> CycNum:
        L = self.order if L is None else L
        if L % self.order:
            raise ValueError(f"zeta_{self.order} does not live in Q(zeta_{L})")
        return cyc_make(L, self.exponent * (L // self.order))

    @classmethod
    def from_cyc(cls, value: CycNum) -> RootOfUnity | None:
        L = value.order
        for j in range(L):
            if cyc_make(L, j) == value:
                return cls(L, j)
        return None

    def __str__(self):
        return f"zeta({self.order})^{self.exponent}"

    _PATTERN = re.compile(r"^\s*zeta\(\s*(\d+)\s*\)\s*(?:\^\s*(-?\d+))?\s*$")

    @classmethod
    def parse(cls, text: str) -> RootOfUnity:
        m = cls._PATTERN.match(text)
        if not m:
            raise ValueError(f"not a root of unity: {text!r}")
        return cls(int(m.group(1)), int(m.group(2) or 1))


def parse_scalar(data, L: int) -> CycNum:
    """Read a scalar given as a CycNum object, ``"zeta(M)^j"``, an int, or ``"p/q"``.

    The result is embedded into Q(zeta_L).
    """
    if isinstance(data, dict):
        value = CycNum.from_json(data)
    elif isinstance(data, bool):
        raise ValueError(f"not a scalar: {data!r}")
    elif isinstance(data, int):
        value = CycNum.rational(L, data)
    elif isinstance(data, str):
        if data.strip().startswith("zeta"):
            value = RootOfUnity.parse(data).to_cyc()
        else:
            value = CycNum.rational(L, Fraction(data.strip()))
    else:
        raise ValueError(f"not a scalar: {data!r}")
    if L % value.order:
        raise ValueError(f"scalar of order {value.order} does not embed into Q(zeta_{L})")
    return value.embed(L)


# ---------------------------------------------------------------------------
# square roots


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def cyc_sqrt(a: CycNum) -> CycNum:
    """A square root of ``a`` inside Q(zeta_L).

    Candidates of the form t*zeta**e (t a positive rational) are tried first,
    in increasing e; the first hit is returned.  Otherwise x**2 - a is factored
    over Q(zeta_L) and the lexicographically smaller root is returned.
    Raises SquareRootNotInField when no root exists.
    """
    L = a.order
    if a.is_zero():
        return a
    for e in range(L):
        b = a * cyc_make(L, -2 * e)
        if b.is_rational():
            t = _rational_sqrt(b.to_fraction())
            if t is not None:
                return cyc_make(L, e) * t
    roots = _general_sqrt(a)
    if not roots:
        raise SquareRootNotInField(f"{a} has no square root in Q(zeta_{L})")
    return min(roots, key=CycNum.sort_key)


def _general_sqrt(a: CycNum) -> list[CycNum]:
    import sympy

    L = a.order
    x = sympy.Symbol("x")
    K = sympy.QQ.algebraic_field(sympy.exp(2 * sympy.pi * sympy.I / L))
    modulus = [int(c) for c in reversed(K.mod.to_list())]
    if tuple(modulus) != cyclotomic_polynomial(L):
        raise ArithmeticError("unexpected defining polynomial for the cyclotomic field")
    coeffs = list(reversed([sympy.Rational(c.numerator, c.denominator) for c in a.coeffs]))
    elem = K.from_sympy(sum(c * K.ext**i for i, c in enumerate(reversed(coeffs))))
    poly = sympy.Poly([K.one, K.zero, -elem], x, domain=K)
    roots = []
    for factor, _ in poly.factor_list()[1]:
        if factor.degree() != 1:
            continue
        lead, const = factor.all_coeffs()
        root = K.from_sympy(-const / lead)
        rep = [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(root.to_list())]
        y = CycNum(L, rep)
        if y * y == a:
            roots.append(y)
    return roots
