"""Exact linear algebra over the rationals."""

from ._backend import BACKEND, rref
from .matrix import (
    Matrix,
    Vector,
    is_zero,
    lincomb,
    unit_vector,
    vadd,
    vec,
    vscale,
    vsub,
    zero_vector,
)
from .scalar import Q, Rational, format_rational, norm, parse_rational
from .subspace import (
    QuotientSpace,
    Subspace,
    contains,
    image,
    intersect,
    kernel,
    quotient,
    rank,
    solve,
    subspace_sum,
)

__all__ = [
    "BACKEND",
    "Matrix",
    "Q",
    "QuotientSpace",
    "Rational",
    "Subspace",
    "Vector",
    "contains",
    "format_rational",
    "image",
    "intersect",
    "is_zero",
    "kernel",
    "lincomb",
    "norm",
    "parse_rational",
    "quotient",
    "rank",
    "rref",
    "solve",
    "subspace_sum",
    "unit_vector",
    "vadd",
    "vec",
    "vscale",
    "vsub",
    "zero_vector",
]
