from __future__ import annotations

import pytest

from taftquiver.errors import SizeMismatch
from taftquiver.quiver import Arrow, FreeElement, PathWord, arrow_word, check_n, compose, free_mul, graded_basis, trivial
from taftquiver.scalars import CycNum


def w(text, n=3):
    return PathWord.parse(text, n)


def el(*pairs, n=3):
    return FreeElement.from_terms(n, [(w(t, n), CycNum.rational(1, c)) for t, c in pairs])


def test_arrow_endpoints_and_codes():
    n = 3
    assert (Arrow(2).source(n), Arrow(2).target(n)) == (2, 0)
    assert (Arrow(2, True).source(n), Arrow(2, True).target(n)) == (0, 2)
    for code in range(6):
        assert Arrow.from_code(code).code() == code
    assert str(Arrow(1, True)) == "a1*"


def test_path_text_round_trip():
    for text in ("e2", "a0", "a0.a1.a1*", "a0.a0*"):
        assert str(w(text)) == text
    with pytest.raises(ValueError):
        w("a0.a0")
    with pytest.raises(ValueError):
        w("a5")


def test_compose_examples():
    assert compose(trivial(0, 3), w("a0"), 3) == w("a0")
    ab = compose(w("a0"), w("a1"), 3)
    assert ab == w("a0.a1") and ab.source(3) == 0 and ab.target(3) == 2
    assert compose(w("a0"), w("a0"), 3) is None


def test_free_products():
    unit = el(("e0", 1), ("e1", 1), ("e2", 1))
    x = el(("a0.a1", 2), ("a2*", -1))
    assert unit * x == x and x * unit == x
    assert el(("a0", 1)) * el(("a0*", 1)) == el(("a0.a0*", 1))
    assert el(("a0", 1), ("a1", 1)) * el(("a1", 1), ("a2", 1)) == el(("a0.a1", 1), ("a1.a2", 1))


def test_free_product_is_associative():
    basis = graded_basis(3, 1)
    for p in basis:
        for q in basis:
            for r in basis:
                x, y, z = (FreeElement.word(t, 3) for t in (p, q, r))
                assert free_mul(free_mul(x, y), z) == free_mul(x, free_mul(y, z))


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("length", [0, 1, 2, 3])
def test_graded_basis_counts(n, length):
    basis = graded_basis(n, length)
    assert len(basis) == n * 2**length
    assert len(set(basis)) == len(basis)
    assert all(b.is_composable(n) and b.length == length for b in basis)


def test_checks():
    with pytest.raises(ValueError):
        check_n(2)
    with pytest.raises(SizeMismatch):
        FreeElement(3) + FreeElement(4)
    assert arrow_word(Arrow(0, True), 3) == PathWord(1, (Arrow(0, True),))
    assert el(("a0", 1), ("a0.a1", 1)).homogeneous_part(2) == el(("a0.a1", 1))
