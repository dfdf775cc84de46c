"""Exact integer linear algebra helpers: gcd, rank, Smith invariant factors.

Everything here works on plain Python integers, so there is no overflow and no
floating point anywhere.  Matrices are given as sequences of equal-length rows.
"""
from __future__ import annotations

from itertools import combinations
from math import gcd


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def integer_rank(rows) -> int:
    """Rank over the rationals of an integer matrix, by fraction-free elimination."""
    mat = [list(row) for row in rows]
    if not mat:
        return 0
    n_cols = len(mat[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pivot_val = mat[rank][col]
        for r in range(rank + 1, len(mat)):
            if mat[r][col]:
                factor = mat[r][col]
                mat[r] = [pivot_val * x - factor * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def det(rows) -> int:
    """Determinant of a square integer matrix (Bareiss fraction-free algorithm)."""
    mat = [list(row) for row in rows]
    n = len(mat)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if mat[i][k]), None)
            if pivot is None:
                return 0
            mat[k], mat[pivot] = mat[pivot], mat[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
            mat[i][k] = 0
        prev = mat[k][k]
    return sign * mat[-1][-1]


def smith_invariant_factors(rows) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix.

    Computed through determinantal divisors: d_1 * ... * d_k equals the gcd of
    all k x k minors.  The matrices appearing here are tiny, and the usual
    `g == 1` early exit makes the minor sweep cheap in the common all-ones case.
    """
    rows = [tuple(row) for row in rows]
    if not rows:
        return []
    n_rows, n_cols = len(rows), len(rows[0])
    rank = integer_rank(rows)
    factors = []
    previous = 1
    for k in range(1, rank + 1):
        g = 0
        for row_sel in combinations(range(n_rows), k):
            for col_sel in combinations(range(n_cols), k):
                sub = [[rows[i][j] for j in col_sel] for i in row_sel]
                g = gcd(g, det(sub))
                if g == 1:
                    break
            if g == 1:
                break
        factors.append(g // previous)
        previous = g
    return factors


def spans_full_lattice(rows, m: int) -> bool:
    """True iff the integer row vectors generate all of Z^m as a lattice."""
    rows = [tuple(row) for row in rows]
    if integer_rank(rows) < m:
        return False
    return all(f == 1 for f in smith_invariant_factors(rows))
