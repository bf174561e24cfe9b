from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from extform import catalog
from extform.core import ProblemSpec, Sense, exact_guarantees
from extform.errors import (
    EmptyPolyhedronError,
    FactorizationInvalidError,
    FormulationInvalidError,
    NotNonnegativeError,
    NotPsdError,
    ShapeError,
)
from extform.factor import (
    LPFactorization,
    LPFormulation,
    SDPFactorization,
    factorization_from_formulation,
    farkas_certificate,
    formulation_from_factorization,
    maxcut_formulation,
    sdp_from_lp,
    solution_partition,
    verify_formulation,
    verify_lp_factorization,
    verify_sdp_factorization,
)
from extform.lp import minimize_ineq
from extform.slack import build_slack

ints = st.integers(-3, 3)


def test_lp_factorization_examples():
    u, v = [F(1), F(2)], [F(3), F(1), F(0)]
    M = [[a * b for b in v] for a in u]
    F1 = LPFactorization([[a] for a in u], [v], [0, 0], n_cols=3)
    assert verify_lp_factorization(M, F1)
    ones = [[F(1)] * 3 for _ in range(2)]
    F0 = LPFactorization([[], []], [], [1, 1], n_cols=3)
    assert verify_lp_factorization(ones, F0) and F0.size == 0
    bad = LPFactorization([[a] for a in u], [[F(3), F(1) + F(1, 7), F(0)]], [0, 0], n_cols=3)
    assert not verify_lp_factorization(M, bad)
    with pytest.raises(ShapeError):
        verify_lp_factorization([[1, 2]], F1)
    assert LPFactorization.from_json(F1.to_json()).product() == F1.product()


def test_sdp_examples():
    F1 = LPFactorization([[F(1), F(2)]], [[F(1), F(0)], [F(0), F(3)]], [F(1)], n_cols=2)
    M = [[F(2), F(7)]]
    assert verify_sdp_factorization(M, sdp_from_lp(F1))
    zero = SDPFactorization([[[F(0)]]], [[[F(0)]]], [F(0)])
    assert verify_sdp_factorization([[F(0)]], zero)
    with pytest.raises(NotPsdError) as e:
        verify_sdp_factorization([[F(0)]], SDPFactorization([[[0, 1], [1, 0]]], [[[0, 0], [0, 0]]], [0]))
    assert e.value.which == ("T", 0)


def test_farkas_examples():
    lam0, lam = farkas_certificate([[-1]], [0], ([1], 0))
    assert lam0 == 0 and lam == [1]
    lam0, lam = farkas_certificate([[-1], [1]], [0, 1], ([-1], 1))
    assert lam0 == 0 and lam == [0, 1]
    with pytest.raises(NotNonnegativeError) as e:
        farkas_certificate([[-1], [1]], [0, 1], ([1], -2))
    assert e.value.witness == [0]
    with pytest.raises(EmptyPolyhedronError):
        farkas_certificate([[1], [-1]], [-1, 0], ([1], 0))
    with pytest.raises(NotNonnegativeError):
        farkas_certificate([[-1]], [0], ([-1], 5))


@given(
    st.lists(st.lists(ints, min_size=2, max_size=2), min_size=0, max_size=4),
    st.lists(ints, min_size=2, max_size=2),
    st.integers(0, 3),
)
def test_farkas_identity(extra, g, slack):
    # a box plus random cuts through a known interior point keeps P nonempty and bounded
    A = [[1, 0], [-1, 0], [0, 1], [0, -1]] + extra
    b = [2, 2, 2, 2] + [abs(r[0]) + abs(r[1]) for r in extra]
    res = minimize_ineq(g, A, b)
    phi0 = -res.value + slack
    lam0, lam = farkas_certificate(A, b, (g, phi0))
    assert lam0 >= 0 and all(v >= 0 for v in lam)
    # phi(x) = lam0 + sum lam_j (b_j - A_j x) as affine functions
    assert [-sum(A[j][i] * lam[j] for j in range(len(A))) for i in range(2)] == g
    assert lam0 + sum(bj * lj for bj, lj in zip(b, lam)) == phi0


def test_maxcut_round_trips():
    for n in (2, 3):
        p = catalog.build_maxcut(n)
        g = exact_guarantees(p)
        L = maxcut_formulation(p)
        Fac = factorization_from_formulation(p, g, L)
        assert Fac.size <= L.size
        assert verify_lp_factorization(build_slack(p, g), Fac)
        L2 = formulation_from_factorization(p, g, Fac)
        verify_formulation(p, g, L2)
        # each w^f is maximized at x = 0 with value C(f) - mu(f)
        for i, f in enumerate(build_slack(p, g).rows):
            assert L2.evaluate(f, [0] * L2.dim) == g.C[f] - Fac.mu[i]


def test_trivial_problem_without_inequalities():
    p = ProblemSpec("one", ("s",), ("f",), lambda f, s: 3, Sense.MAXIMIZE, lambda f: 1)
    from extform.core import Guarantees

    g = Guarantees({"f": F(5)}, {"f": F(5)})
    L = LPFormulation([], [], {"s": []}, {"f": ([], 3)}, dim=0)
    Fac = factorization_from_formulation(p, g, L)
    assert Fac.size == 0 and Fac.mu == [2]
    L0 = formulation_from_factorization(p, g, LPFactorization([[]], [], [2], n_cols=1))
    assert L0.dim == 0


def test_formulation_violations():
    p = catalog.build_maxcut(3)
    g = exact_guarantees(p)
    L = maxcut_formulation(p)
    dropped = LPFormulation(L.A[1:], L.b[1:], L.points, L.funcs)
    with pytest.raises(FormulationInvalidError) as e:
        verify_formulation(p, g, dropped)
    assert e.value.condition == "approx"
    shifted = LPFormulation(L.A, L.b, L.points, {f: (w, c + 1) for f, (w, c) in L.funcs.items()})
    with pytest.raises(FormulationInvalidError) as e:
        verify_formulation(p, g, shifted)
    assert e.value.condition == "linear"
    bad_F = LPFactorization([[F(0)]] * 8, [[F(0)] * 8], [F(0)] * 8, n_cols=8)
    with pytest.raises(FactorizationInvalidError):
        formulation_from_factorization(p, g, bad_F)


def test_solution_partition():
    T = [[F(1), F(1)]]
    Fp = LPFactorization(T, [[F(1), F(1), F(0)], [F(0), F(0), F(1)]], [0], n_cols=3)
    assert solution_partition(Fp) == ([0, 2], [1])
    Fi = LPFactorization(T, [[F(1), F(0)], [F(0), F(1)]], [0], n_cols=2)
    assert solution_partition(Fi) == ([0, 1], [])
    Fd = LPFactorization([[F(1)]], [[F(1), F(2)]], [0], n_cols=2)
    assert solution_partition(Fd) == ([0], [1])
