"""Kernel selection.

The compiled ``_crref`` extension is used when it can be imported; set
``HOMLIE_PURE_PYTHON=1`` to force the pure-Python kernel.  Calls that
overflow int64 in the compiled kernel are transparently re-run in Python.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import lcm

from . import _pyrref
from .scalar import Rational

_c_rref_int = None
if not os.environ.get("HOMLIE_PURE_PYTHON"):
    try:
        from ._crref import rref_int as _c_rref_int
    except ImportError:  # extension not built
        _c_rref_int = None

BACKEND = "cython" if _c_rref_int is not None else "python"


def rref_int(rows: list[list[int]], ncols: int, backend: str | None = None):
    """Dispatch to a kernel; ``backend`` forces ``"python"`` or ``"cython"``."""
    if backend == "python" or (backend is None and _c_rref_int is None):
        return _pyrref.rref_int(rows, ncols)
    if _c_rref_int is None:
        raise RuntimeError("compiled kernel not available")
    try:
        return _c_rref_int(rows, ncols)
    except OverflowError:
        return _pyrref.rref_int(rows, ncols)


def _integer_rows(rows) -> list[list[int]]:
    out = []
    for r in rows:
        den = 1
        for x in r:
            if type(x) is not int:
                den = lcm(den, x.denominator)
        if den == 1:
            out.append([x if type(x) is int else int(x) for x in r])
        else:
            out.append([int(x * den) for x in r])
    return out


def rref(rows, ncols: int, backend: str | None = None) -> tuple[list[tuple[Rational, ...]], list[int]]:
    """Reduced row echelon form over Q.

    Returns the nonzero rows (pivot entries equal to 1) and their pivot
    columns.
    """
    if ncols == 0 or not rows:
        return [], []
    reduced, pivots = rref_int(_integer_rows(rows), ncols, backend)
    out = []
    for row, c in zip(reduced, pivots):
        pv = row[c]
        if pv == 1:
            out.append(tuple(row))
        else:
            out.append(tuple(
                (v // pv if v % pv == 0 else Fraction(v, pv)) if v else 0 for v in row
            ))
    return out, pivots
