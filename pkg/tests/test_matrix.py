from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclohecke.matrix import Matrix, matrix_rank, nullspace, rank

small = st.integers(-4, 4).map(Fraction)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


@given(square(3), square(3), square(3))
def test_product_associative(a, b, c):
    A, B, C = (Matrix.from_dense(x) for x in (a, b, c))
    assert ((A @ B) @ C).equals(A @ (B @ C))
    assert (A @ (B + C)).equals(A @ B + A @ C)
    assert (A @ B).transpose().equals(B.transpose() @ A.transpose())


@given(square(3))
def test_inverse(a):
    A = Matrix.from_dense(a)
    if matrix_rank(A) < 3:
        with pytest.raises(ZeroDivisionError):
            A.inverse()
        return
    assert (A @ A.inverse()).equals(Matrix.identity(3, Fraction(0), Fraction(1)))


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=4))
def test_rank_nullity(rows):
    A = Matrix.from_dense(rows)
    basis = nullspace(A.rows, 4, Fraction(1))
    assert len(basis) + matrix_rank(A) == 4
    for vec in basis:
        assert A.apply(vec) == {}


def test_rank_examples():
    assert rank([{0: 1, 1: 2}, {0: 2, 1: 4}]) == 1
    assert matrix_rank(Matrix.identity(4, Fraction(0), Fraction(1))) == 4
    assert matrix_rank(Matrix(3, 3, None, Fraction(0), Fraction(1))) == 0


def test_trace_and_diagonal():
    D = Matrix.diagonal([1, 2, 3], Fraction(0), Fraction(1))
    assert D.is_diagonal() and D.trace() == 6
    assert D.first_difference(D.copy()) is None
    E = D.copy()
    E[0, 1] = Fraction(1)
    assert D.first_difference(E) == (0, 1)
