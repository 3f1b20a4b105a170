"""Exact Gaussian elimination over any of the coefficient fields.

Works generically with Fraction, RatFunc and GFElem entries: all that is
required of an entry is field arithmetic via operators and truthiness for a
zero test.
"""

from __future__ import annotations

from typing import Iterable


def rank_dense(rows: list[list]) -> int:
    """Rank of a dense matrix given as a list of rows (destructive copy)."""
    mat = [list(r) for r in rows]
    rank = 0
    ncols = max((len(r) for r in mat), default=0)
    col = 0
    while col < ncols and rank < len(mat):
        piv = None
        for r in range(rank, len(mat)):
            if col < len(mat[r]) and mat[r][col]:
                piv = r
                break
        if piv is None:
            col += 1
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        prow = mat[rank]
        pval = prow[col]
        for r in range(rank + 1, len(mat)):
            if col < len(mat[r]) and mat[r][col]:
                f = mat[r][col] / pval
                row = mat[r]
                for c in range(col, len(row)):
                    row[c] = row[c] - f * prow[c]
        rank += 1
        col += 1
    return rank


def rank_sparse(rows: Iterable[dict]) -> int:
    """Rank of a matrix given as sparse rows (dicts column -> entry).

    Column keys may be any hashable, totally consistent labels. Entries of
    reduced rows are kept sparse, which matters for the large symmetric-power
    invariant computations.
    """
    pivots: dict = {}  # pivot column -> reduced row (with 1 at the pivot)
    rank = 0
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            # Deterministic pivot choice keeps runs reproducible.
            col = min(row, key=_colkey)
            if col in pivots:
                f = row[col]
                prow = pivots[col]
                for c, v in prow.items():
                    nv = row.get(c, None)
                    nv = -f * v if nv is None else nv - f * v
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
            else:
                pval = row[col]
                pivots[col] = {c: v / pval for c, v in row.items()}
                rank += 1
                break
    return rank


def _colkey(c):
    return (repr(type(c)), repr(c)) if not isinstance(c, (int, tuple, str)) else ("", c)


def mat_mul(a: list[list], b: list[list], zero):
    """Dense exact matrix product."""
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = [[zero for _ in range(m)] for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for s in range(k):
            v = ai[s]
            if not v:
                continue
            bs = b[s]
            for j in range(m):
                if bs[j]:
                    oi[j] = oi[j] + v * bs[j]
    return out
