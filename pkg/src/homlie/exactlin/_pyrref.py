"""Pure-Python fraction-free Gauss-Jordan elimination over the integers.

This is the reference kernel; ``_crref`` implements the identical algorithm
on 64-bit integers and defers to this module whenever an intermediate value
would overflow.
"""

from __future__ import annotations

from math import gcd


def _primitive(row: list[int]) -> None:
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return
    if g > 1:
        for j, v in enumerate(row):
            if v:
                row[j] = v // g


def rref_int(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Row-reduce an integer matrix without leaving the integers.

    Returns ``(reduced, pivots)``: the nonzero rows of an integer echelon form
    in which every pivot is positive, every other entry of a pivot column is
    zero and every row is primitive (content 1), together with the pivot
    column of each row.  Dividing each row by its pivot entry gives the
    reduced row echelon form over Q.
    """
    a = [list(r) for r in rows]
    nrows = len(a)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and a[p][c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            a[p], a[r] = a[r], a[p]
        prow = a[r]
        if prow[c] < 0:
            for j in range(ncols):
                prow[j] = -prow[j]
        _primitive(prow)
        pv = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = a[i]
            f = row[c]
            if f == 0:
                continue
            g = gcd(pv, f)
            s, t = pv // g, f // g
            for j in range(ncols):
                row[j] = s * row[j] - t * prow[j]
            _primitive(row)
        pivots.append(c)
        r += 1
    return a[:r], pivots
