import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from extform import catalog
from extform.core import exact_guarantees
from extform.errors import NotNonnegativeError, ShapeError
from extform.factor import LPFactorization, sdp_from_lp, verify_lp_factorization
from extform.rational import rank
from extform.rounding import bounded_factorization, max_volume_rows, round_to_problem
from extform.slack import build_slack


def trivial(M):
    m = len(M)
    return LPFactorization([[F(int(i == j)) for j in range(m)] for i in range(m)], [r[:] for r in M],
                           [F(0)] * m, n_cols=len(M[0]))


def test_rank_one_term():
    u, v = [F(1, 2), F(1)], [F(3), F(-2), F(1)]
    BF = bounded_factorization([[a * b for b in v] for a in u])
    assert len(BF.terms) == 1
    a, b = BF.terms[0]
    assert a == u and b == v


def test_identity_terms():
    BF = bounded_factorization([[1, 0], [0, 1]])
    assert len(BF.terms) == 2
    assert all(x in (0, 1) for a, b in BF.terms for x in a + b)


def test_random_rank_three():
    rng = random.Random(3)
    A = [[F(rng.randint(-3, 3)) for _ in range(3)] for _ in range(4)]
    B = [[F(rng.randint(-3, 3)) for _ in range(5)] for _ in range(3)]
    M = [[sum(A[i][k] * B[k][j] for k in range(3)) for j in range(5)] for i in range(4)]
    BF = bounded_factorization(M)
    assert len(BF.terms) == rank(M)
    assert all(abs(x) <= 1 for a, _ in BF.terms for x in a)


def test_greedy_volume_beyond_exhaustive_limit():
    rng = random.Random(5)
    M = [[F(rng.randint(-4, 4)) for _ in range(3)] for _ in range(15)]
    BF = bounded_factorization(M)
    assert BF.product(15, 3) == M
    assert len(max_volume_rows(M, [0, 1, 2])) == 3


@pytest.fixture(scope="module")
def maxcut():
    p = catalog.build_maxcut(3)
    g = exact_guarantees(p)
    return p, g, build_slack(p, g).entries


def test_zero_perturbation(maxcut):
    p, g, M = maxcut
    res = round_to_problem(p, g, M, trivial(M))
    assert res.k == 0 and res.N == M and res.delta == 0
    assert all(res.Cprime[f] == g.C[f] for f in res.Cprime)


def test_errors(maxcut):
    p, g, M = maxcut
    with pytest.raises(ShapeError):
        round_to_problem(p, g, M[:-1])
    neg = [r[:] for r in M]
    neg[0][0] = F(-1)
    with pytest.raises(NotNonnegativeError):
        round_to_problem(p, g, neg)


@given(st.lists(st.integers(-5, 5), min_size=64, max_size=64))
def test_rounding_identities(noise):
    p = catalog.build_maxcut(3)
    g = exact_guarantees(p)
    M = build_slack(p, g).entries
    Mt = [[max(F(0), M[i][j] + F(noise[8 * i + j], 25)) for j in range(8)] for i in range(8)]
    Ft = trivial(Mt)
    res = round_to_problem(p, g, Mt, Ft, sdp_from_lp(Ft))
    assert res.k <= rank(M) + rank(Mt)
    assert all(v >= 0 for r in res.N for v in r)
    assert verify_lp_factorization(res.N, res.certificate)
    assert verify_lp_factorization(res.shifted_matrix, res.shifted_certificate)
    assert res.certificate.size <= res.size_bound
    for f in res.Cprime:
        assert res.fstar[f] <= res.Cprime[f]
