"""Exact Gaussian elimination over cyclotomic fields.

Rows are sparse ``{column: CycNum}`` dicts.  Pivots are chosen column by
column (ascending), taking the first remaining row with a nonzero entry, so
results are deterministic.
"""

from __future__ import annotations

from .scalars import CycNum

Row = dict[int, CycNum]


def _axpy(target: Row, factor: CycNum, source: Row) -> Row:
    out = dict(target)
    for c, v in source.items():
        nv = out[c] - factor * v if c in out else -(factor * v)
        if nv:
            out[c] = nv
        else:
            out.pop(c, None)
    return out


def row_reduce(rows: list[Row]) -> tuple[list[Row], list[int]]:
    """Reduced row echelon form of ``rows``; returns (nonzero rows, pivot columns)."""
    pending = [dict(r) for r in rows if r]
    reduced: list[Row] = []
    pivots: list[int] = []
    while pending:
        col = min(min(r) for r in pending)
        idx = next(i for i, r in enumerate(pending) if col in r)
        prow = pending.pop(idx)
        inv = prow[col].inv()
        prow = {c: v * inv for c, v in prow.items()}
        pending = [r for r in (_axpy(r, r[col], prow) if col in r else r for r in pending) if r]
        reduced = [_axpy(r, r[col], prow) if col in r else r for r in reduced]
        reduced.append(prow)
        pivots.append(col)
    return reduced, pivots


def nullspace(rows: list[Row], ncols: int, L: int) -> list[list[CycNum]]:
    """Basis of {x : rows . x = 0}, one vector per free column (free entry = 1)."""
    reduced, pivots = row_reduce(rows)
    pivot_set = set(pivots)
    zero = CycNum.zero(L)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [zero] * ncols
        vec[free] = CycNum.one(L)
        for r, p in zip(reduced, pivots):
            if free in r:
                vec[p] = -r[free]
        basis.append(vec)
    return basis


def rank(rows: list[Row]) -> int:
    return len(row_reduce(rows)[1])


def reduce_vector(reduced: list[Row], pivots: list[int], vec: Row) -> Row:
    """Remainder of ``vec`` after clearing every pivot column of an RREF system."""
    out = dict(vec)
    for r, p in zip(reduced, pivots):
        if p in out:
            out = _axpy(out, out[p], r)
    return out


def in_span(basis: list[Row], vec: Row) -> bool:
    reduced, pivots = row_reduce(basis)
    return not reduce_vector(reduced, pivots, vec)


def dense_to_row(vec: list[CycNum]) -> Row:
    return {i: v for i, v in enumerate(vec) if v}
