from __future__ import annotations

import random

from taftquiver.linalg import dense_to_row, in_span, nullspace, rank, row_reduce
from taftquiver.scalars import CycNum, zeta


def test_nullspace_of_a_cyclotomic_system():
    L = 12
    z = zeta(L, 4)
    one = CycNum.one(L)
    rows = [{0: one, 1: -z}, {1: one, 2: -z}]
    (vec,) = nullspace(rows, 3, L)
    assert vec[0] == z * z and vec[1] == z and vec[2] == 1


def test_rank_and_span_random():
    rng = random.Random(2)
    L = 5
    for _ in range(30):
        base = [[CycNum(L, [rng.randint(-3, 3) for _ in range(4)]) for _ in range(5)] for _ in range(3)]
        combo = [base[0][j] * 2 - base[2][j] * zeta(5) for j in range(5)]
        rows = [dense_to_row(r) for r in base]
        assert in_span(rows, dense_to_row(combo))
        assert rank(rows + [dense_to_row(combo)]) == rank(rows)
        for vec in nullspace(rows, 5, L):
            for r in base:
                assert sum((a * b for a, b in zip(r, vec)), CycNum.zero(L)) == 0


def test_row_reduce_is_reduced():
    L = 3
    one = CycNum.one(L)
    reduced, pivots = row_reduce([{0: one, 1: one}, {0: one, 2: one}, {1: one}])
    assert pivots == [0, 1, 2]
    for r, p in zip(reduced, pivots):
        assert r[p] == 1
        assert all(p not in other for other in reduced if other is not r)
