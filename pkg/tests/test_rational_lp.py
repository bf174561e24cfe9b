from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.optimize import linprog

from extform.errors import RationalParseError, ShapeError
from extform.lp import maximize_ineq, minimize_ineq, solve_standard
from extform.rational import (
    affine_rank_of_columns,
    det,
    fmt_rational,
    identity,
    inverse,
    matmul,
    parse_rational,
    rank,
    to_matrix,
)

small = st.integers(-4, 4)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@pytest.mark.parametrize("text,value", [("3", F(3)), ("-1/2", F(-1, 2)), (" 4 / 6 ", F(2, 3)), (7, F(7))])
def test_parse_accepts(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1/0", "0.5", "1e3", "", "a/b", 0.5, True, None])
def test_parse_rejects(text):
    with pytest.raises(RationalParseError):
        parse_rational(text)


@given(rationals)
def test_format_round_trip(x):
    assert parse_rational(fmt_rational(x)) == x


def test_ragged_matrix():
    with pytest.raises(ShapeError):
        to_matrix([[1, 2], [3]])


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4))
def test_rank_matches_numpy(rows):
    assert rank(rows) == np.linalg.matrix_rank(np.array(rows, dtype=float))


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_inverse_and_det(rows):
    M = to_matrix(rows)
    d = det(M)
    assert abs(float(d) - np.linalg.det(np.array(rows, dtype=float))) < 1e-6
    if d != 0:
        assert matmul(M, inverse(M)) == identity(3)


def test_affine_rank():
    # three collinear columns span a line
    assert affine_rank_of_columns([[0, 1, 2], [0, 1, 2]]) == 1
    assert affine_rank_of_columns([[1, 1], [1, 1]]) == 0


def test_standard_form_small():
    # min -x - y, x + y + s = 1
    res = solve_standard([-1, -1, 0], [[1, 1, 1]], [1])
    assert res.status == "optimal" and res.value == -1


def test_infeasible_and_unbounded():
    assert minimize_ineq([0], [[1], [-1]], [-1, -1]).status == "infeasible"
    res = minimize_ineq([-1, 0], [[-1, 0], [0, -1]], [0, 0])
    assert res.status == "unbounded"
    # the returned ray stays feasible and improves the objective
    assert all(sum(a * r for a, r in zip(row, res.ray)) <= 0 for row in [[-1, 0], [0, -1]])
    assert -res.ray[0] < 0


@given(
    st.lists(st.lists(small, min_size=2, max_size=2), min_size=1, max_size=5),
    st.lists(st.integers(0, 6), min_size=5, max_size=5),
    st.lists(small, min_size=2, max_size=2),
)
def test_ineq_lp_matches_scipy(A, b, c):
    b = b[: len(A)]
    # add a box so the LP is bounded
    A2 = A + [[1, 0], [-1, 0], [0, 1], [0, -1]]
    b2 = b + [5, 5, 5, 5]
    res = minimize_ineq(c, A2, b2)
    ref = linprog(c, A_ub=A2, b_ub=b2, bounds=[(None, None)] * 2, method="highs")
    if ref.status == 2:
        assert res.status == "infeasible"
    else:
        assert res.status == "optimal"
        assert abs(float(res.value) - ref.fun) < 1e-7
        assert all(sum(F(a) * x for a, x in zip(row, res.x)) <= bi for row, bi in zip(A2, b2))


def test_maximize():
    res = maximize_ineq([1, 1], [[1, 0], [0, 1]], [F(1, 3), F(2, 3)])
    assert res.value == 1
