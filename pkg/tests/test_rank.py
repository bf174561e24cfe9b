from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from extform import catalog
from extform.core import exact_guarantees
from extform.errors import NotNonnegativeError
from extform.factor import verify_lp_factorization
from extform.rank import (
    Budget,
    fooling_set,
    lp_rank_bounds,
    maximal_rectangles,
    nonneg_rank_bounds,
    rank_sandwich,
    rectangle_cover_number,
)
from extform.slack import build_slack


def I(n):
    return [[F(int(i == j)) for j in range(n)] for i in range(n)]


def test_spec_examples():
    lp, nn = rank_sandwich(I(2))
    assert (lp.lower, lp.upper, nn.lower, nn.upper) == (2, 2, 2, 2)
    ones = [[F(1)] * 3 for _ in range(3)]
    assert (lp_rank_bounds(ones).lower, lp_rank_bounds(ones).upper) == (0, 0)
    assert nonneg_rank_bounds(ones).upper == 1
    uv = [[F(a * b) for b in (1, 2, 3)] for a in (1, 3)]
    lp, nn = rank_sandwich(uv)
    assert nn.exact and nn.upper == 1 and lp.upper == 1


def test_shift_saves_one():
    # [[1,2],[1,3]] = [1;1] 1^T + [0 1; 0 2]: LP rank 1, nonnegative rank 2
    lp, nn = rank_sandwich([[F(1), F(2)], [F(1), F(3)]])
    assert (lp.lower, lp.upper, nn.lower, nn.upper) == (1, 1, 2, 2)
    assert lp.certificate_upper.mu == [1, 1]


def test_shift_cannot_lower_rank():
    # J + I: any rank-lowering shift would exceed the row minima
    M = [[F(1) + F(int(i == j)) for j in range(3)] for i in range(3)]
    lp, nn = rank_sandwich(M)
    assert lp.certificate_lower["rank_drop_shift"] is None
    assert (lp.lower, lp.upper, nn.lower, nn.upper) == (3, 3, 3, 3)


def test_maxcut_slack_ranks():
    p = catalog.build_maxcut(3)
    lp, nn = rank_sandwich(build_slack(p, exact_guarantees(p)))
    assert (lp.lower, lp.upper, nn.lower, nn.upper) == (4, 4, 4, 4)


def test_rectangles_and_fooling_sets():
    assert rectangle_cover_number(I(3))[0] == 3
    assert len(fooling_set(I(3))) == 3
    M = [[1, 1, 0], [1, 1, 1], [0, 1, 1]]
    rects = maximal_rectangles(M)
    cells = {(i, j) for R, C in rects for i in R for j in C}
    assert cells == {(i, j) for i in range(3) for j in range(3) if M[i][j]}
    assert rectangle_cover_number(M)[0] == 2


def test_negative_matrix_rejected():
    with pytest.raises(NotNonnegativeError):
        rank_sandwich([[1, -1]])


def test_budget_from_env(monkeypatch):
    monkeypatch.setenv("EXTFORM_RANK_BUDGET", "max_entries=9, max_rank=2")
    b = Budget.from_env()
    assert b.max_entries == 9 and b.max_rank == 2
    monkeypatch.setenv("EXTFORM_RANK_BUDGET", "bogus=1")
    with pytest.raises(ValueError):
        Budget.from_env()


@given(st.lists(st.lists(st.integers(0, 3), min_size=3, max_size=3), min_size=2, max_size=3))
def test_sandwich_is_sound(rows):
    M = [[F(v) for v in r] for r in rows]
    lp, nn = rank_sandwich(M, Budget(restarts=2, iterations=60))
    assert lp.lower <= lp.upper and nn.lower <= nn.upper
    assert verify_lp_factorization(M, lp.certificate_upper)
    assert verify_lp_factorization(M, nn.certificate_upper)
    assert all(v == 0 for v in nn.certificate_upper.mu)
    # rank_LP <= nnegrk <= rank_LP + 1 must be consistent with both intervals
    assert lp.lower <= nn.upper and nn.lower <= lp.upper + 1
