"""Exact rank computation for integer matrices.

Fraction-free (Bareiss) elimination in int64 with an overflow guard; if
intermediate entries ever get large we redo the computation with exact
rationals.  No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

# Entries are bounded by minors of the input; with this guard the update
# products stay far inside int64.
_GUARD = 1 << 25


def integer_rank(rows) -> int:
    """Rank over the rationals of an integer matrix (list of rows)."""
    mat = [list(r) for r in rows]
    if not mat or not mat[0]:
        return 0
    try:
        return _bareiss_rank(np.array(mat, dtype=np.int64))
    except OverflowError:
        return _fraction_rank(mat)


def _bareiss_rank(a: np.ndarray) -> int:
    m, ncols = a.shape
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rank, m):
            if a[r, col] != 0:
                piv = r
                break
        if piv is None:
            continue
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        if int(np.abs(a).max()) > _GUARD:
            raise OverflowError("entries too large for int64 elimination")
        p = int(a[rank, col])
        below = a[rank + 1 :]
        if below.size:
            below[:] = (below * p - np.outer(below[:, col], a[rank])) // prev
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def _fraction_rank(mat: list[list[int]]) -> int:
    rows = [[Fraction(v) for v in r] for r in mat]
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pivot = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            factor = rows[r][col] / pivot
            if factor:
                rows[r] = [v - factor * w for v, w in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank
