"""Independent reference implementations used only by the tests.

None of these share code with the library beyond plain data: they work on
nested lists of Fractions and recompute everything from the definitions.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def det(rows):
    """Cofactor expansion along the first row."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * Fraction(rows[0][j]) * det(minor)
    return total


def rank_by_minors(rows, ncols):
    """Largest k with a nonzero k x k minor."""
    nrows = len(rows)
    for k in range(min(nrows, ncols), 0, -1):
        for rs in combinations(range(nrows), k):
            for cs in combinations(range(ncols), k):
                if det([[rows[r][c] for c in cs] for r in rs]):
                    return k
    return 0


def bracket(c, x, y):
    n = len(x)
    out = [Fraction(0)] * n
    for i in range(n):
        for j in range(n):
            if x[i] and y[j]:
                for k in range(n):
                    out[k] += x[i] * y[j] * c[i][j][k]
    return out


def apply(A, x):
    """``A`` given as rows."""
    return [sum(Fraction(a) * b for a, b in zip(row, x)) for row in A]


def hom_jacobi_holds(c, A):
    """Evaluate [a x, [y, z]] + [a y, [z, x]] + [a z, [x, y]] on all basis triples."""
    n = len(A)
    e = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for x in e:
        for y in e:
            for z in e:
                t1 = bracket(c, apply(A, x), bracket(c, y, z))
                t2 = bracket(c, apply(A, y), bracket(c, z, x))
                t3 = bracket(c, apply(A, z), bracket(c, x, y))
                if any(a + b + d for a, b, d in zip(t1, t2, t3)):
                    return False
    return True


def _perm_sign(seq):
    seq = list(seq)
    sign = 1
    # selection sort counting swaps
    for i in range(len(seq)):
        m = min(range(i, len(seq)), key=seq.__getitem__)
        if m != i:
            seq[i], seq[m] = seq[m], seq[i]
            sign = -sign
    return sign


def _wedge(vectors):
    """Dict {sorted tuple: coefficient} by summing over all index choices."""
    out = {}
    n = len(vectors[0]) if vectors else 0
    k = len(vectors)

    def rec(pos, chosen, coef):
        if pos == k:
            if len(set(chosen)) == k:
                key = tuple(sorted(chosen))
                out[key] = out.get(key, 0) + _perm_sign(chosen) * coef
            return
        for i in range(n):
            if vectors[pos][i]:
                rec(pos + 1, chosen + [i], coef * vectors[pos][i])

    rec(0, [], Fraction(1))
    return {t: v for t, v in out.items() if v}


def classical_ce_boundary(c, rho, n):
    """Untwisted Chevalley-Eilenberg boundary ``M (x) Lambda^n L -> M (x) Lambda^(n-1) L``
    for a left module given by ``rho[i]`` (rows), in the standard convention

        d(m (x) x_1..x_n) = sum_i (-1)^i x_i.m (x) x_1..^i..x_n
                          + sum_{i<j} (-1)^(i+j) m (x) [x_i, x_j] x_1..^i..^j..x_n

    Returns the matrix as a list of rows, basis (module index slowest, lex tuples).
    """
    dim = len(c)
    m = len(rho[0]) if rho else 1
    src = [(a, T) for a in range(m) for T in combinations(range(dim), n)]
    tgt = [(a, T) for a in range(m) for T in combinations(range(dim), n - 1)]
    tindex = {b: k for k, b in enumerate(tgt)}
    M = [[Fraction(0)] * len(src) for _ in tgt]
    unit = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    for col, (a, T) in enumerate(src):
        for i in range(n):
            rest = [unit[T[k]] for k in range(n) if k != i]
            w = _wedge(rest) if rest else {(): Fraction(1)}
            # x_i . e_a = column a of rho[T[i]]
            for b in range(m):
                coef = rho[T[i]][b][a]
                if coef:
                    for S, v in w.items():
                        M[tindex[b, S]][col] += (-1) ** (i + 1) * coef * v
        for i in range(n):
            for j in range(i + 1, n):
                rest = [unit[T[k]] for k in range(n) if k not in (i, j)]
                br = c[T[i]][T[j]]
                if not any(br):
                    continue
                w = _wedge([list(br)] + rest)
                for S, v in w.items():
                    M[tindex[a, S]][col] += (-1) ** (i + j + 2) * v
    return M


def is_isomorphic_on_grid(L1, L2, grid):
    """Search ``P`` with entries in ``grid`` such that ``P`` is an isomorphism L1 -> L2
    (2-dimensional only).  Works on raw nested lists: c[i][j][k], alpha rows."""
    from itertools import product

    (c1, A1), (c2, A2) = L1, L2
    for p in product(grid, repeat=4):
        P = [[p[0], p[1]], [p[2], p[3]]]
        if p[0] * p[3] - p[1] * p[2] == 0:
            continue
        cols = [[P[0][0], P[1][0]], [P[0][1], P[1][1]]]
        # P maps basis of L1 to vectors in L2: P[c1(e_i, e_j)] == [P e_i, P e_j]_2
        ok = True
        lhs = apply(P, c1[0][1])
        rhs = bracket(c2, cols[0], cols[1])
        if lhs != rhs:
            ok = False
        if ok:
            PA = [[sum(P[r][k] * A1[k][s] for k in range(2)) for s in range(2)] for r in range(2)]
            AP = [[sum(A2[r][k] * P[k][s] for k in range(2)) for s in range(2)] for r in range(2)]
            ok = PA == AP
        if ok:
            return P
    return None


__all__ = [
    "apply",
    "bracket",
    "classical_ce_boundary",
    "det",
    "hom_jacobi_holds",
    "is_isomorphic_on_grid",
    "rank_by_minors",
]
