from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homlie.errors import DimensionError
from homlie.exactlin import (
    BACKEND,
    Matrix,
    Q,
    Subspace,
    format_rational,
    image,
    intersect,
    kernel,
    parse_rational,
    quotient,
    rank,
    rref,
    solve,
    subspace_sum,
)
from homlie.exactlin import _backend

from oracles import rank_by_minors

small = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    sparse = draw(st.booleans())
    entry = st.one_of(st.just(Fraction(0)), small) if sparse else small
    rows = [[draw(entry) for _ in range(c)] for _ in range(r)]
    return Matrix(rows, c)


@st.composite
def vector_sets(draw, n=None, max_count=4):
    n = draw(st.integers(1, 5)) if n is None else n
    k = draw(st.integers(0, max_count))
    return n, [tuple(draw(st.integers(-2, 2)) for _ in range(n)) for _ in range(k)]


# scalars


def test_scalar_normalisation_and_parsing():
    assert Q(Fraction(4, 2)) == 2 and type(Q(Fraction(4, 2))) is int
    assert parse_rational("-6/4") == Fraction(-3, 2)
    assert parse_rational(" 7 ") == 7
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert format_rational(5) == "5"
    with pytest.raises(TypeError):
        Q(0.5)
    with pytest.raises(TypeError):
        Q(True)
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational("1.5")


@given(small)
def test_format_parse_round_trip(x):
    assert parse_rational(format_rational(x)) == x


# rank, kernel, image, solve


def test_rank_trivial_cases():
    assert rank(Matrix.identity(3)) == 3
    assert rank(Matrix.zeros(2, 4)) == 0


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_agrees_with_minor_oracle(m):
    assert rank(m) == rank_by_minors([list(r) for r in m.rows], m.ncols)


def test_kernel_examples():
    assert kernel(Matrix.identity(3)).dim == 0
    assert kernel(Matrix.zeros(2, 3)) == Subspace.full(3)
    assert kernel(Matrix([[1, 1]])) == Subspace.span([(1, -1)], 2)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity_and_kernel_vectors(m):
    K = kernel(m)
    assert rank(m) + K.dim == m.ncols
    for v in K.vectors():
        assert all(x == 0 for x in m @ v)


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_image_dimension_is_rank(m):
    assert image(m).dim == rank(m)


def test_image_trivial_cases():
    assert image(Matrix.identity(3)) == Subspace.full(3)
    assert image(Matrix.zeros(3, 2)) == Subspace.zero(3)


def test_solve_examples():
    assert solve(Matrix.identity(3), (1, 2, 3)) == (1, 2, 3)
    assert solve(Matrix.zeros(2, 2), (1, 0)) is None
    with pytest.raises(DimensionError):
        solve(Matrix.identity(2), (1, 2, 3))


@settings(max_examples=100, deadline=None)
@given(matrices(), st.data())
def test_solve_consistent_systems_have_zero_residual(m, data):
    x0 = [data.draw(small) for _ in range(m.ncols)]
    b = m @ x0
    x = solve(m, b)
    assert x is not None
    assert m @ x == b


# subspaces


@settings(max_examples=100, deadline=None)
@given(vector_sets(n=4), vector_sets(n=4))
def test_sum_intersection_dimension_formula(a, b):
    (n, va), (_, vb) = a, b
    s1, s2 = Subspace.span(va, n), Subspace.span(vb, n)
    assert s1.dim + s2.dim == subspace_sum(s1, s2).dim + intersect(s1, s2).dim
    # oracle: dim(s1 + s2) is the rank of the stacked vectors
    stacked = [list(v) for v in va + vb]
    assert subspace_sum(s1, s2).dim == rank_by_minors(stacked, n)
    I = intersect(s1, s2)
    assert I <= s1 and I <= s2


@given(vector_sets())
def test_lattice_idempotence_and_zero(a):
    n, vs = a
    s = Subspace.span(vs, n)
    assert s + s == s and (s & s) == s
    z = Subspace.zero(n)
    assert s + z == s and (s & z) == z


@settings(max_examples=100, deadline=None)
@given(vector_sets(n=4), st.randoms(use_true_random=False))
def test_canonical_form_independent_of_spanning_set(a, rnd):
    n, vs = a
    s = Subspace.span(vs, n)
    shuffled = list(vs)
    rnd.shuffle(shuffled)
    mixed = [tuple(2 * x - y for x, y in zip(v, w)) for v, w in zip(shuffled, shuffled[1:] + shuffled[:1])]
    # the mixed vectors lie in the span, so the canonical form must not move
    t = Subspace.span(mixed + shuffled, n)
    assert t.basis == s.basis and t == s


def test_dimension_mismatch_is_an_error():
    with pytest.raises(DimensionError):
        Subspace.full(2) + Subspace.full(3)
    with pytest.raises(DimensionError):
        Subspace.span([(1, 2, 3)], 2)


@settings(max_examples=100, deadline=None)
@given(vector_sets(n=4), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_quotient_round_trip(a, v):
    n, vs = a
    R = Subspace.span(vs, n)
    Qs = quotient(n, R)
    assert Qs.repr_dim == n - R.dim
    assert Qs.project @ Qs.section == Matrix.identity(Qs.repr_dim)
    assert kernel(Qs.project) == R
    back = Qs.section @ (Qs.project @ v)
    assert R.contains(tuple(x - y for x, y in zip(back, v)))


@settings(max_examples=100, deadline=None)
@given(matrices(max_rows=4, max_cols=4))
def test_inverse_reconstructs_exactly(m):
    if m.is_square() and m.is_invertible():
        assert m @ m.inverse() == Matrix.identity(m.nrows)
        assert m.inverse() @ m == Matrix.identity(m.nrows)


def test_matrix_shape_errors():
    with pytest.raises(DimensionError):
        Matrix.identity(2) @ Matrix.identity(3)
    with pytest.raises(DimensionError):
        Matrix([[1, 2], [3]])


# kernels


@settings(max_examples=200, deadline=None)
@given(matrices(max_rows=6, max_cols=6))
def test_python_and_compiled_kernels_agree(m):
    rows = [list(r) for r in m.rows]
    py = rref(rows, m.ncols, backend="python")
    if BACKEND == "cython":
        assert rref(rows, m.ncols, backend="cython") == py
    assert rref(rows, m.ncols) == py


def test_compiled_kernel_falls_back_on_overflow():
    big = 2**62
    rows = [[big, 3, 1], [5, big, 7], [1, 1, big]]
    expected = _backend.rref_int(rows, 3, backend="python")
    assert _backend.rref_int(rows, 3) == expected
    assert len(expected[1]) == 3


@settings(max_examples=60, deadline=None)
@given(st.lists(small, min_size=25, max_size=25))
def test_det_agrees_with_cofactor_oracle(vals):
    from oracles import det

    rows = [vals[5 * i: 5 * i + 5] for i in range(5)]
    assert Matrix(rows, 5).det() == det(rows)
