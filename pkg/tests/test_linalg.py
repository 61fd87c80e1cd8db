from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from raddeg.errors import DimensionMismatch
from raddeg.fields import GF, QQ
from raddeg.linalg import (
    EchelonSpan,
    Matrix,
    QuotientMap,
    char_poly,
    intersect_row_spaces,
    solve_left_matrix,
    sum_row_spaces,
)

F2 = GF(2)
F3 = GF(3)


def M(field, rows, ncols=None):
    return Matrix(field, [[field.from_int(x) if field.kind != "rationals" else Fraction(x) for x in r] for r in rows], ncols=ncols)


def test_mul_row_convention():
    # v*A then *B equals v*(A*B): composition reads left to right
    A = M(F3, [[1, 2], [0, 1]])
    B = M(F3, [[2, 0], [1, 1]])
    v = M(F3, [[1, 1]])
    assert (v * A) * B == v * (A * B)


def test_rref_invertible_is_identity():
    A = M(F3, [[1, 1], [1, 2]])
    R, pivots = A.rref()
    assert R == Matrix.identity(F3, 2)
    assert pivots == (0, 1)


def test_rref_rational():
    A = Matrix(QQ, [[Fraction(2), Fraction(4)], [Fraction(1), Fraction(2)]])
    R, pivots = A.rref()
    assert pivots == (0,)
    assert R.rows[0] == [Fraction(1), Fraction(2)]
    assert R.rows[1] == [Fraction(0), Fraction(0)]


def test_left_kernel_oracle():
    A = M(F2, [[1, 1], [1, 1]])
    K = A.left_kernel()
    assert K.nrows == 1
    assert K.rows == [[1, 1]]


def test_left_kernel_zero_matrix():
    A = Matrix.zero(F2, 3, 2)
    K = A.left_kernel()
    assert K == Matrix.identity(F2, 3)


def test_left_kernel_full_rank():
    A = Matrix.identity(F3, 3)
    assert A.left_kernel().nrows == 0


def test_rank_nullity():
    A = M(F3, [[1, 2, 0], [2, 1, 0], [0, 0, 0], [1, 2, 0]])
    assert A.rank() + A.left_kernel().nrows == A.nrows


def test_solve_left_free_vars_zero():
    A = M(F2, [[1], [1]])
    x = A.solve_left([F2.one])
    assert x == [1, 0]


def test_solve_left_inconsistent():
    A = M(F2, [[1, 0], [1, 0]])
    assert A.solve_left([F2.zero, F2.one]) is None


def test_solve_left_matrix_roundtrip():
    A = M(F3, [[1, 2], [2, 2], [0, 1]])
    B = M(F3, [[1, 0], [0, 1]])
    X = solve_left_matrix(A, B)
    assert X is not None
    assert X * A == B


def test_matrix_ops_shape_checks():
    with pytest.raises(DimensionMismatch):
        M(F2, [[1, 0]]) * M(F2, [[1, 0]])
    with pytest.raises(DimensionMismatch):
        M(F2, [[1, 0]]) + M(F2, [[1]])


def test_echelon_span_canonical():
    s1 = EchelonSpan.from_rows(F3, 3, [[1, 1, 0], [0, 1, 1]])
    s2 = EchelonSpan.from_rows(F3, 3, [[1, 2, 1], [1, 0, 2]])
    # same plane, different generators
    assert s1.basis_matrix() == s2.basis_matrix()
    assert s1 == s2
    assert s1.dim == 2


def test_echelon_span_insert_and_contains():
    s = EchelonSpan(F2, 3)
    assert s.insert([1, 1, 0])
    assert not s.insert([1, 1, 0])
    assert s.insert([0, 0, 1])
    assert s.contains([1, 1, 1])
    assert not s.contains([1, 0, 0])
    assert s.dim == 2


def test_echelon_span_coefficients():
    s = EchelonSpan.from_rows(F3, 3, [[1, 0, 2], [0, 1, 1]])
    v = [2, 1, 2]  # 2*(1,0,2) + 1*(0,1,1) = (2,1,5) = (2,1,2) mod 3
    coeffs = s.coefficients(v)
    assert coeffs == [2, 1]
    assert s.coefficients([0, 0, 1]) is None


def test_quotient_map_dimensions():
    s = EchelonSpan.from_rows(F2, 4, [[1, 0, 1, 0], [0, 1, 1, 1]])
    q = QuotientMap(s)
    assert q.dim == 2
    assert q.free_cols == [2, 3]
    # projection kills the span
    assert q.project_vector([1, 0, 1, 0]) == [0, 0]
    # project then lift then project is project
    v = [1, 1, 0, 1]
    w = q.project_vector(v)
    assert q.project_vector(q.lift_vector(w)) == w


def test_quotient_projection_matrix_matches_vector_map():
    s = EchelonSpan.from_rows(F3, 3, [[1, 1, 1]])
    q = QuotientMap(s)
    P = q.projection_matrix()
    assert P.nrows == 3 and P.ncols == 2
    for v in ([1, 0, 0], [0, 2, 1], [1, 1, 1]):
        via_matrix = (Matrix(F3, [v]) * P).rows[0]
        assert via_matrix == q.project_vector(v)


def test_sum_and_intersection_dimension_formula():
    a = M(F3, [[1, 0, 0, 0], [0, 1, 0, 0]])
    b = M(F3, [[0, 1, 0, 0], [0, 0, 1, 0]])
    s = sum_row_spaces(a, b)
    i = intersect_row_spaces(a, b)
    assert s.nrows == 3
    assert i.nrows == 1
    assert i.rows == [[0, 1, 0, 0]]


def test_intersection_trivial():
    a = M(F2, [[1, 0]])
    b = M(F2, [[0, 1]])
    assert intersect_row_spaces(a, b).nrows == 0


def test_char_poly_companion():
    # companion matrix of x^3 + x + 1 over GF(2), acting on rows
    A = M(F2, [[0, 1, 0], [0, 0, 1], [1, 1, 0]])
    cp = char_poly(A)
    assert cp == [1, 1, 0, 1]


def test_char_poly_diagonal_rational():
    A = Matrix(QQ, [[Fraction(2), Fraction(0)], [Fraction(0), Fraction(3)]])
    cp = char_poly(A)
    # (x-2)(x-3) = x^2 - 5x + 6
    assert cp == [Fraction(6), Fraction(-5), Fraction(1)]


def test_char_poly_nilpotent():
    A = M(F3, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert char_poly(A) == [0, 0, 0, 1]


def test_char_poly_trace_determinant_2x2():
    A = M(F3, [[1, 2], [2, 2]])
    cp = char_poly(A)
    # x^2 - tr x + det; tr = 0 mod 3, det = 1*2 - 2*2 = -2 = 1 mod 3
    assert cp == [1, 0, 1]


@st.composite
def small_matrix(draw):
    n = draw(st.integers(1, 4))
    m = draw(st.integers(1, 4))
    rows = [[draw(st.integers(0, 2)) for _ in range(m)] for _ in range(n)]
    return Matrix(F3, rows, ncols=m)


@settings(max_examples=60, deadline=None)
@given(small_matrix())
def test_rref_is_idempotent(A):
    R1, p1 = A.rref()
    R2, p2 = R1.rref()
    assert R1 == R2 and p1 == p2


@settings(max_examples=60, deadline=None)
@given(small_matrix())
def test_kernel_annihilates(A):
    K = A.left_kernel()
    if K.nrows:
        assert (K * A).is_zero()
    assert K.nrows + A.rank() == A.nrows


@settings(max_examples=60, deadline=None)
@given(small_matrix(), small_matrix())
def test_row_space_dimension_formula(A, B):
    if A.ncols != B.ncols:
        B = Matrix(F3, [r[: A.ncols] + [0] * (A.ncols - len(r[: A.ncols])) for r in B.rows], ncols=A.ncols)
    s = sum_row_spaces(A, B)
    i = intersect_row_spaces(A, B)
    assert s.nrows + i.nrows == A.rank() + B.rank()


@settings(max_examples=40, deadline=None)
@given(small_matrix())
def test_char_poly_cayley_hamilton(A):
    if A.nrows != A.ncols:
        n = min(A.nrows, A.ncols)
        A = Matrix(F3, [r[:n] for r in A.rows[:n]], ncols=n)
    if A.nrows == 0:
        return
    cp = char_poly(A)
    acc = Matrix.zero(F3, A.nrows, A.ncols)
    power = Matrix.identity(F3, A.nrows)
    for c in cp:
        acc = acc + power.scale(c)
        power = power * A
    assert acc.is_zero()
