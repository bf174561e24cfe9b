import json
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from extform import catalog, gadgets
from extform.core import exact_guarantees
from extform.errors import ReductionError, SimpleReductionInvalidError
from extform.factor import LPFactorization, sdp_from_lp, verify_lp_factorization
from extform.rank import rank_sandwich
from extform.reduce import (
    Reduction,
    compose_lp,
    compose_sdp,
    fit_affine,
    identity_reduction,
    matrix_reduction,
    simple_reduction,
    verify_reduction,
)
from extform.slack import build_slack


@pytest.fixture(scope="module")
def maxcut3():
    p = catalog.build_maxcut(3)
    return p, exact_guarantees(p)


def test_identity_reduction(maxcut3):
    p, g = maxcut3
    red = identity_reduction(p)
    assert verify_reduction(p, g, p, g, red).ok
    mr = matrix_reduction(red, p, g, p, g)
    n = len(p.solutions)
    assert mr.R == [[F(int(i == j)) for j in range(8)] for i in range(8)]
    assert mr.dense_C() == [[F(int(i == j)) for j in range(n)] for i in range(n)]
    assert mr.t == [0] * 8
    M = build_slack(p, g).entries
    F2 = rank_sandwich(M)[0].certificate_upper
    F1 = compose_lp(mr, F2, M, M)
    assert F1.T == F2.T and F1.U == F2.U and F1.mu == F2.mu


def test_corrupted_gamma_reports_residual():
    g = gadgets.maxcut_to_maxindep(3)
    red = g.reduction
    s1 = g.source.solutions[1]
    other = g.gamma_image(g.source.solutions[2])
    gamma = dict(red.gamma)
    gamma[s1] = [(red.gamma[s1][0][0], F(1, 2)), (other, F(1, 2))]
    bad = Reduction(red.beta, gamma, red.sense_pair)
    rep = verify_reduction(g.source, g.source_guarantees, g.target, g.target_guarantees, bad)
    assert not rep.ok
    v = rep.first()
    assert v["kind"] == "value" and v["s1"] == "001" and F(v["residual"]) != 0


def test_invalid_coefficients():
    p = catalog.build_maxcut(2)
    with pytest.raises(ReductionError):
        Reduction({}, {s: [(s, F(1, 2))] for s in p.solutions}, (p.sense, p.sense))
    with pytest.raises(ReductionError):
        Reduction({f: ([(f, -1)], 0) for f in p.instances}, {}, (p.sense, p.sense))


def test_serialization_round_trip():
    g = gadgets.maxcut_to_dicut(3)
    text = g.reduction.to_json(g.source, g.target)
    back = Reduction.from_json(text, g.source, g.target)
    assert back.beta == g.reduction.beta and back.gamma == g.reduction.gamma
    doc = json.loads(text)
    doc["gamma"][0]["terms"][0][0] = 10 ** 6
    with pytest.raises(KeyError):
        Reduction.from_json(json.dumps(doc), g.source, g.target)


def test_simple_reduction_examples():
    P1 = catalog.build_csp("CUT", 3)
    P2 = catalog.build_min_csp("MinUnCUT", 3, instances=list(P1.instances))
    red = simple_reduction(lambda L: L, lambda s: s, -1, 1, P1, P2)
    assert red.meta["simple"].exact
    # dropping a clause breaks the size identity
    def drop(L):
        return catalog.ClauseSet(L.clauses[1:], L.weights[1:])

    P3 = catalog.build_csp("CUT", 3, instances=list(dict.fromkeys(drop(L) for L in P1.instances)))
    with pytest.raises(SimpleReductionInvalidError) as e:
        simple_reduction(drop, lambda s: s, 1, 0, P1, P3)
    assert e.value.witness is not None
    with pytest.raises(SimpleReductionInvalidError):
        simple_reduction(lambda L: L, lambda s: s, 1, 0, P1, P2)


def test_fit_affine():
    pts = [(a, b, 2 * a - 3 * b) for a in range(3) for b in range(3)]
    assert fit_affine(pts) == (2, -3)
    assert fit_affine([(0, 0, 1)]) is None


def test_chained_matrix_reductions():
    # MaxCUT -> MinUnCUT followed by MinUnCUT -> MinUnCUT identity composes to the direct one
    g = gadgets.maxcut_to_minuncut(3)
    ident = identity_reduction(g.target)
    inner = matrix_reduction(ident, g.target, g.target_guarantees, g.target, g.target_guarantees)
    both = g.matrix.then(inner)
    M2 = build_slack(g.target, g.target_guarantees).entries
    assert both.apply(M2) == build_slack(g.source, g.source_guarantees).entries


def test_zero_row_in_R_gives_pure_shift():
    g = gadgets.maxcut_to_max2sat(3)
    M1 = build_slack(g.source, g.source_guarantees).entries
    M2 = build_slack(g.target, g.target_guarantees).entries
    F2 = rank_sandwich(M2)[0].certificate_upper
    S1 = compose_sdp(g.matrix, sdp_from_lp(F2), None, M1)
    for i, row in enumerate(g.matrix.R):
        if not any(row):
            assert all(v == 0 for r in S1.Ts[i] for v in r)


@given(st.lists(st.integers(0, 3), min_size=8, max_size=8))
def test_size_zero_composition(mu):
    # M2 = mu 1^T factors with size 0; composition keeps size 0 with shift R mu + t
    g = gadgets.maxcut_to_dicut(3)
    n2 = len(g.target.solutions)
    rows2 = build_slack(g.target, g.target_guarantees).rows
    mu2 = [F(mu[i % 8]) for i in range(len(rows2))]
    F2 = LPFactorization([[] for _ in rows2], [], mu2, n_cols=n2)
    F1 = compose_lp(g.matrix, F2)
    assert F1.size == 0
    expect = [sum(b * m for b, m in zip(r, mu2)) + t for r, t in zip(g.matrix.R, g.matrix.t)]
    assert F1.mu == expect
    M1 = g.matrix.apply([[m] * n2 for m in mu2])
    assert verify_lp_factorization(M1, F1)
