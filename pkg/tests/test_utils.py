from fractions import Fraction

import numpy as np
import pytest
from sympy import ImmutableMatrix, Rational

from burnsidefix.utils import (
    clear_denominators,
    column_basis,
    det_sign,
    determinant,
    exact_matrix,
    identity_matrix,
    integer_array,
    matrix_to_strings,
    parse_fraction,
    restricted_det_sign,
)


def test_parse_fraction():
    assert parse_fraction("-3/4") == Fraction(-3, 4)
    assert parse_fraction(" 2 ") == Fraction(2)
    assert parse_fraction(5) == Fraction(5)
    assert parse_fraction(Rational(1, 3)) == Fraction(1, 3)
    # floats would silently lose exactness
    for bad in [0.5, "1/0", "x", True, None]:
        with pytest.raises(ValueError):
            parse_fraction(bad)


def test_exact_matrix_shapes():
    m = exact_matrix([["1/2", 0], [0, "2"]], size=2)
    assert m[0, 0] == Rational(1, 2)
    assert exact_matrix([], size=0).shape == (0, 0)
    with pytest.raises(ValueError):
        exact_matrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        exact_matrix([[1, 2]], size=2)
    assert matrix_to_strings(m) == [["1/2", "0"], ["0", "2"]]


def test_clear_denominators():
    scaled, d = clear_denominators(exact_matrix([["1/2", "1/3"], [1, 0]]))
    # lcm(2, 3) = 6
    assert d == 6
    assert scaled == ImmutableMatrix([[3, 2], [6, 0]])


def test_determinant():
    assert determinant(exact_matrix([["1/2", 1], [0, "2/3"]])) == Fraction(1, 3)
    assert determinant(exact_matrix([[0, 1], [1, 0]])) == -1
    assert determinant(identity_matrix(0)) == 1
    assert det_sign(exact_matrix([[1, 2], [2, 4]])) == 0
    assert det_sign(exact_matrix([["-1/7"]])) == -1
    with pytest.raises(ValueError):
        determinant(ImmutableMatrix([[1, 2]]))


def test_column_basis():
    projector = exact_matrix([["1/2", "1/2"], ["1/2", "1/2"]])
    basis = column_basis(projector)
    assert basis.shape == (2, 1)
    assert column_basis(exact_matrix([[0, 0], [0, 0]])).shape == (2, 0)


def test_restricted_det_sign():
    m = exact_matrix([[-1, 0], [0, 2]])
    e1 = exact_matrix([[1], [0]])
    e2 = exact_matrix([[0], [1]])
    assert restricted_det_sign(m, e1) == -1
    assert restricted_det_sign(m, e2) == 1
    # the empty subspace counts as positive
    assert restricted_det_sign(m, ImmutableMatrix.zeros(2, 0)) == 1


def test_integer_array():
    arr = integer_array([[1, "2"], [0, -3]], (2, 2))
    assert arr.dtype == object
    assert arr.tolist() == [[1, 2], [0, -3]]
    assert integer_array([], (0, 3)).shape == (0, 3)
    assert integer_array([[], []], (2, 0)).shape == (2, 0)
    with pytest.raises(ValueError):
        integer_array([["1/2"]], (1, 1))
    with pytest.raises(ValueError):
        integer_array([[1, 2]], (2, 1))
    # exact arithmetic survives large entries
    big = integer_array([[10**30]], (1, 1))
    assert (big.dot(big))[0, 0] == 10**60
