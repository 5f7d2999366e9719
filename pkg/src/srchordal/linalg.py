"""Exact matrix ranks: GF(2) on bitset rows, GF(p), and integer Bareiss.

No floating point anywhere; Betti numbers are integers over a fixed
field and must be computed exactly.
"""

from __future__ import annotations


def gf2_rank(rows: list[int]) -> int:
    """Rank over GF(2) of rows given as bitmask ints."""
    pivots: list[int] = []
    rank = 0
    for row in rows:
        for p in pivots:
            low = p & -p
            if row & low:
                row ^= p
        if row:
            pivots.append(row)
            rank += 1
    return rank


def gfp_rank(rows: list[list[int]], p: int) -> int:
    """Rank over GF(p) by straightforward modular elimination."""
    mat = [[x % p for x in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    col = 0
    while rank < len(mat) and col < ncols:
        pivot_row = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot_row is None:
            col += 1
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        prow = mat[rank]
        for r in range(rank + 1, len(mat)):
            factor = mat[r][col]
            if factor:
                scale = factor * inv % p
                row = mat[r]
                for c in range(col, ncols):
                    row[c] = (row[c] - scale * prow[c]) % p
        rank += 1
        col += 1
    return rank


def int_rank(rows: list[list[int]]) -> int:
    """Rank over the rationals via fraction-free (Bareiss) elimination."""
    mat = [list(row) for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    col = 0
    prev = 1
    while rank < len(mat) and col < ncols:
        pivot_row = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot_row is None:
            col += 1
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        piv = mat[rank][col]
        for r in range(rank + 1, len(mat)):
            row = mat[r]
            head = row[col]
            for c in range(col, ncols):
                row[c] = (piv * row[c] - head * mat[rank][c]) // prev
        prev = piv
        rank += 1
        col += 1
    return rank
