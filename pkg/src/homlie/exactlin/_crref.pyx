# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""int64 fraction-free Gauss-Jordan elimination.

Same algorithm and output as ``_pyrref.rref_int``.  Every multiply and
subtract is overflow-checked; on overflow ``OverflowError`` is raised and the
caller falls back to the arbitrary-precision Python kernel.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    static inline int _mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int _sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int _mul_ovf(long long a, long long b, long long *r) nogil
    int _sub_ovf(long long a, long long b, long long *r) nogil


# LLONG_MIN has no negation; treated as overflow everywhere
cdef long long _LMIN = -9223372036854775807 - 1


cdef inline long long _gcd(long long a, long long b) nogil:
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef void _primitive(long long *row, Py_ssize_t ncols) nogil:
    cdef long long g = 0
    cdef Py_ssize_t j
    for j in range(ncols):
        if row[j]:
            g = _gcd(g, row[j])
            if g == 1:
                return
    if g > 1:
        for j in range(ncols):
            row[j] = row[j] // g


cdef int _eliminate(long long *a, Py_ssize_t nrows, Py_ssize_t ncols,
                    Py_ssize_t *pivots, Py_ssize_t *rank) nogil:
    cdef Py_ssize_t r = 0, c, p, i, j
    cdef long long pv, f, g, s, t, x, y, tmp
    cdef long long *prow
    cdef long long *row
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and a[p * ncols + c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            for j in range(ncols):
                tmp = a[p * ncols + j]
                a[p * ncols + j] = a[r * ncols + j]
                a[r * ncols + j] = tmp
        prow = a + r * ncols
        if prow[c] < 0:
            for j in range(ncols):
                prow[j] = -prow[j]
        _primitive(prow, ncols)
        pv = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = a + i * ncols
            f = row[c]
            if f == 0:
                continue
            g = _gcd(pv, f)
            s = pv // g
            t = f // g
            for j in range(ncols):
                if _mul_ovf(s, row[j], &x):
                    return 1
                if _mul_ovf(t, prow[j], &y):
                    return 1
                if _sub_ovf(x, y, &row[j]) or row[j] == _LMIN:
                    return 1
            _primitive(row, ncols)
        pivots[r] = c
        r += 1
    rank[0] = r
    return 0


def rref_int(rows, Py_ssize_t ncols):
    """int64 twin of ``_pyrref.rref_int``; raises OverflowError on overflow."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t i, j, rank = 0
    cdef int status
    if nrows == 0 or ncols == 0:
        return [], []
    cdef long long *a = <long long *> malloc(nrows * ncols * sizeof(long long))
    cdef Py_ssize_t *pivots = <Py_ssize_t *> malloc(nrows * sizeof(Py_ssize_t))
    if a == NULL or pivots == NULL:
        free(a)
        free(pivots)
        raise MemoryError()
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                # conversion raises OverflowError for entries beyond int64
                a[i * ncols + j] = row[j]
                if a[i * ncols + j] == _LMIN:
                    raise OverflowError("entry out of int64 range")
        with nogil:
            status = _eliminate(a, nrows, ncols, pivots, &rank)
        if status:
            raise OverflowError("int64 overflow during elimination")
        out = [[a[i * ncols + j] for j in range(ncols)] for i in range(rank)]
        return out, [pivots[i] for i in range(rank)]
    finally:
        free(a)
        free(pivots)
