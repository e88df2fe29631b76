"""Exact matrix rank over the rationals by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def integer_rows(rows) -> list:
    """Scale each rational row by the lcm of its denominators."""
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out


def rank(rows) -> int:
    """Rank of a rational matrix given as a list of rows.

    Bareiss elimination keeps every intermediate entry an integer (each is a
    minor of the input), so no fractions are created after the initial
    scaling.
    """
    a = integer_rows(rows)
    if not a or not a[0]:
        return 0
    m, n = len(a), len(a[0])
    prev = 1
    r = 0
    for col in range(n):
        if r == m:
            break
        pivot = next((i for i in range(r, m) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][col]
        for i in range(r + 1, m):
            f = a[i][col]
            row_i, row_r = a[i], a[r]
            for j in range(col + 1, n):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[col] = 0
        prev = p
        r += 1
    return r
