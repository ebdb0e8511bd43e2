from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from lderlab.exceptions import DimensionError
from lderlab.linalg import (
    Matrix,
    Subspace,
    char_poly,
    det,
    det_and_inverse,
    generalized_eigenspace,
    kernel_from_row_blocks,
    nullspace,
    poly_eval,
    rank,
    rational_eigenvalues,
    rref,
    subspace_intersect,
    subspace_sum,
)

small = st.integers(-4, 4)


def int_matrices(rows=st.integers(1, 5), cols=st.integers(1, 5)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0])
    )


def square(n_max=5):
    return st.integers(1, n_max).flatmap(
        lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)
    )


def to_sympy(rows):
    return sympy.Matrix(rows)


@given(int_matrices())
def test_rank_matches_sympy(rows):
    assert rank(Matrix(rows)) == to_sympy(rows).rank()


@given(int_matrices())
def test_nullspace_is_the_kernel(rows):
    M = Matrix(rows)
    K = nullspace(M)
    assert K.dim == M.cols - to_sympy(rows).rank()
    for v in K.basis:
        assert all(x == 0 for x in M.apply(v))


@given(int_matrices())
def test_rref_matches_sympy(rows):
    R, r = rref(Matrix(rows))
    S, pivots = to_sympy(rows).rref()
    assert r == len(pivots)
    assert [[Fraction(str(x)) for x in S.row(i)] for i in range(S.rows)] == [list(row) for row in R.entries]


@given(square())
def test_det_and_inverse(rows):
    M = Matrix(rows)
    d, inv = det_and_inverse(M)
    assert d == Fraction(str(to_sympy(rows).det()))
    if d:
        assert M @ inv == Matrix.identity(M.rows)
    else:
        assert inv is None


@given(square())
def test_char_poly_matches_sympy_and_cayley_hamilton(rows):
    M = Matrix(rows)
    coeffs = char_poly(M)
    t = sympy.Symbol("t")
    expected = sympy.Poly(to_sympy(rows).charpoly(t).as_expr(), t).all_coeffs()[::-1]
    assert list(coeffs) == [Fraction(str(c)) for c in expected]
    assert poly_eval(coeffs, M).is_zero()


@given(square(4))
def test_rational_eigenvalues_are_roots(rows):
    spec = rational_eigenvalues(Matrix(rows))
    eig = to_sympy(rows).eigenvals()
    rational = {Fraction(str(k)): v for k, v in eig.items() if k.is_rational}
    assert dict(spec.eigenvalues) == rational
    assert spec.complete == (sum(rational.values()) == len(rows))


def test_generalized_eigenspace_of_jordan_block():
    J = Matrix([[2, 1, 0], [0, 2, 0], [0, 0, 3]])
    assert generalized_eigenspace(J, 2).dim == 2
    assert generalized_eigenspace(J, 3).dim == 1
    assert generalized_eigenspace(J, 5).is_zero()


def vectors(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), max_size=4)


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(st.just(n), vectors(n), vectors(n))))
def test_dimension_formula(case):
    n, us, vs = case
    U, V = Subspace.span(us, n), Subspace.span(vs, n)
    S, I = subspace_sum(U, V), subspace_intersect(U, V)
    assert S.dim + I.dim == U.dim + V.dim
    assert S.contains_subspace(U) and S.contains_subspace(V)
    assert U.contains_subspace(I) and V.contains_subspace(I)
    assert (U + V) == S and (U & V) == I


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(st.just(n), vectors(n))))
def test_span_is_canonical(case):
    n, vs = case
    U = Subspace.span(vs, n)
    assert Subspace.span(list(reversed(vs)), n) == U
    assert Subspace.span([[2 * x for x in v] for v in vs], n) == U
    assert Subspace.span(U.basis, n) == U


@given(st.integers(0, 5))
def test_kernel_from_row_blocks_matches_direct_solve(seed):
    rng = np.random.default_rng(seed)
    ncols = 12
    basis = rng.integers(-3, 4, size=(4, ncols))
    # rows orthogonal to a random 4-dimensional space, many more than columns
    null = nullspace(Matrix(basis.tolist()))
    rows = np.array([[int(x) for x in v] for v in
                     (sum(rng.integers(-2, 3) * np.array([int(c * 6) for c in b]) for b in null.basis)
                      for _ in range(60))], dtype=object)
    blocks = [rows[i:i + 10] for i in range(0, 60, 10)]
    K = kernel_from_row_blocks(lambda: iter(blocks), ncols, seed=seed)
    assert K == nullspace(Matrix(rows.tolist()))


def test_kernel_from_row_blocks_detects_all_rows():
    ncols = 6
    rows = [[1, 0, 0, 0, 0, 0]] * 30 + [[0, 0, 0, 0, 0, 1]]
    blocks = [np.array(rows, dtype=object)]
    K = kernel_from_row_blocks(lambda: iter(blocks), ncols, seed=3)
    assert K.dim == 4


def test_matrix_basics():
    A = Matrix([[1, 2], [3, 4]])
    assert A.T == Matrix([[1, 3], [2, 4]])
    assert A.trace() == 5
    assert det(A) == -2
    assert A.commutator(Matrix.identity(2)).is_zero()
    assert Matrix.from_flat(A.flat(), 2) == A
    with pytest.raises(DimensionError):
        Matrix([[1, 2], [3]])
    with pytest.raises(DimensionError):
        Subspace.span([[1, 2, 3]], 2)
