from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qaut import exact_linalg as la


def small_matrix(rows, cols):
    entry = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.lists(st.lists(entry, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(la.matrix)


square = st.integers(1, 4).flatmap(lambda n: small_matrix(n, n))


def test_solve_identity():
    assert la.solve_linear(la.identity(2), [3, 5]) == (3, 5)


def test_solve_inconsistent():
    assert la.solve_linear(la.matrix([[1, 1], [1, 1]]), [1, 2]) is None


def test_solve_diagonal():
    assert la.solve_linear(la.matrix([[2, 0], [0, 4]]), [1, 1]) == (F(1, 2), F(1, 4))


def test_solve_dimension_mismatch():
    with pytest.raises(la.DimensionError):
        la.solve_linear(la.identity(2), [1, 2, 3])


def test_kernel_examples():
    assert la.kernel_basis(la.identity(3)) == []
    assert len(la.kernel_basis(la.zeros(2, 2))) == 2
    (v,) = la.kernel_basis(la.matrix([[1, 1], [2, 2]]))
    assert v[0] == -v[1] != 0


def test_kernel_of_empty_matrix():
    assert la.kernel_basis((), 3) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


@pytest.mark.parametrize("n", [1, 2, 5])
def test_identity_det_and_inverse(n):
    assert la.determinant(la.identity(n)) == 1
    assert la.invert(la.identity(n)) == la.identity(n)


def test_swap_is_self_inverse():
    swap = la.matrix([[0, 1], [1, 0]])
    assert la.determinant(swap) == -1
    assert la.invert(swap) == swap


def test_singular():
    a = la.matrix([[1, 2], [2, 4]])
    assert la.determinant(a) == 0
    assert la.invert(a) is None


def test_non_square_rejected():
    with pytest.raises(la.DimensionError):
        la.determinant(la.matrix([[1, 2]]))
    with pytest.raises(la.DimensionError):
        la.invert(la.matrix([[1, 2]]))


def test_scalar_parsing():
    assert la.scalar("3/6") == F(1, 2)
    assert la.format_scalar(F(4, 2)) == "2"
    assert la.format_scalar(F(-3, 2)) == "-3/2"
    with pytest.raises(TypeError):
        la.scalar(0.5)


@settings(max_examples=60, deadline=None)
@given(square)
def test_determinant_matches_sympy(a):
    assert la.determinant(a) == sympy.Matrix(a).det()


@settings(max_examples=60, deadline=None)
@given(square)
def test_inverse_exact(a):
    inv = la.invert(a)
    if la.determinant(a) == 0:
        assert inv is None
    else:
        assert la.matmul(inv, a) == la.identity(len(a))
        assert inv == la.matrix([[str(x) for x in row] for row in sympy.Matrix(a).inv().tolist()])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(small_matrix(n, n), small_matrix(n, n))))
def test_determinant_multiplicative(pair):
    a, b = pair
    assert la.determinant(la.matmul(a, b)) == la.determinant(a) * la.determinant(b)


@settings(max_examples=60, deadline=None)
@given(st.tuples(st.integers(1, 4), st.integers(1, 4)).flatmap(
    lambda rc: st.tuples(small_matrix(*rc), st.lists(st.fractions(-3, 3, max_denominator=3), min_size=rc[0], max_size=rc[0]))))
def test_solution_substitutes_back(case):
    a, b = case
    x = la.solve_linear(a, b)
    if x is None:
        assert la.rank(a) < la.rank(tuple(r + (v,) for r, v in zip(a, b)))
    else:
        assert la.matvec(a, x) == tuple(b)


@settings(max_examples=60, deadline=None)
@given(st.tuples(st.integers(1, 4), st.integers(1, 4)).flatmap(lambda rc: small_matrix(*rc)))
def test_kernel_rank_nullity(a):
    basis = la.kernel_basis(a)
    assert len(basis) == la.shape(a)[1] - la.rank(a)
    for v in basis:
        assert la.is_zero_vector(la.matvec(a, v))
