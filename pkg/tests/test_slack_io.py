import json
from fractions import Fraction as F

import pytest

from extform import catalog
from extform.catalog import Graph
from extform.core import Guarantees, exact_guarantees, proportional_guarantees
from extform.errors import GuaranteeOrderError, ShapeError
from extform.io import (
    clause_set_from_json,
    graph_from_json,
    load_matrix,
    matrix_to_csv,
    matrix_to_json,
    parse_matrix_csv,
    parse_matrix_json,
)
from extform.slack import (
    build_slack,
    count_disjoint_ones,
    indep_clique_slack,
    junta_slack,
    matching_slack_submatrix,
)

K3 = Graph.on(3, [(1, 2), (1, 3), (2, 3)])


def test_maxcut_slack_entries():
    p = catalog.build_maxcut(3)
    S = build_slack(p, exact_guarantees(p))
    assert S.shape == (8, 8) and S.zero_per_row()
    assert S.entry(K3, (0, 1, 1)) == 0
    assert S.entry(K3, (0, 0, 0)) == 2
    S1 = build_slack(p, proportional_guarantees(p, 1, 1))
    assert S1.entry(K3, (0, 1, 1)) == 1


def test_slack_nonnegative_for_min_problem():
    p = catalog.build_min_csp("MinUnCUT", 3)
    S = build_slack(p, exact_guarantees(p))
    assert all(v >= 0 for r in S.entries for v in r) and S.zero_per_row()


def test_misordered_guarantee():
    # with C >= S every sound row is already nonnegative; C < S is rejected up front
    p = catalog.build_maxcut(2)
    C = {f: F(0) for f in p.instances}
    S = {f: F(1) for f in p.instances}
    with pytest.raises(GuaranteeOrderError):
        build_slack(p, Guarantees(C, S))


def test_matching_slack_examples():
    S = matching_slack_submatrix(4)
    U = S.meta["odd_sets"].index((1, 2, 3))
    assert S.entries[U][S.cols.index(((1, 2), (3, 4)))] == 0
    assert S.entries[U][S.cols.index(((1, 4), (2, 3)))] == 0
    S6 = matching_slack_submatrix(6)
    U = S6.meta["odd_sets"].index((1, 2, 3))
    assert S6.entries[U][S6.cols.index(((1, 4), (2, 5), (3, 6)))] == 1
    assert S6.shape == (26, 15)


def test_junta_slack():
    S = junta_slack(3, 2)
    for a, row in zip(S.rows, S.entries):
        for b, v in zip(S.cols, row):
            t = sum(x * y for x, y in zip(a, b))
            assert v == {0: 1, 1: 0, 2: 1}[t]
    assert count_disjoint_ones(3, 2) == 6
    assert count_disjoint_ones(5, 2) == 80
    assert count_disjoint_ones(3, 3) == 1


def test_clique_slack_shift():
    S = indep_clique_slack(3, F(1, 2))
    assert S.meta["shift"] == 1
    assert min(v for r in S.entries for v in r) == 1


def test_matrix_round_trips(tmp_path):
    M = [[F(1, 2), F(0)], [F(3), F(-7, 3)]]
    text = matrix_to_json(M, ["a", "b"], ["x", "y"])
    back, rows, cols = parse_matrix_json(text)
    assert back == M and rows == ["a", "b"] and cols == ["x", "y"]
    assert parse_matrix_csv(matrix_to_csv(M, ["a", "b"], ["x", "y"])) == M
    assert parse_matrix_csv(matrix_to_csv(M)) == M
    path = tmp_path / "m.csv"
    path.write_text(matrix_to_csv(M))
    assert load_matrix(path) == M
    with pytest.raises(ShapeError):
        parse_matrix_json(json.dumps({"entries": [["1"]], "rows": ["a", "b"]}))


def test_slack_serialization():
    p = catalog.build_maxcut(2)
    S = build_slack(p, exact_guarantees(p))
    M, rows, cols = parse_matrix_json(S.to_json())
    assert M == S.entries and rows == ["E{}", "E{1-2}"] and cols == ["00", "01", "10", "11"]


def test_ingestion():
    G = graph_from_json({"n": 3, "edges": [[1, 2], [2, 3]]})
    assert G == Graph.on(3, [(1, 2), (2, 3)])
    L = clause_set_from_json({"clauses": [
        {"op": "xor", "vars": [2, 1], "b": 1, "weight": "1/2"},
        {"op": "or", "lits": [[1, 0], [2, 1]]},
        {"op": "table", "vars": [1, 2], "table": [0, 1, 1, 0]},
    ]})
    assert L.total_weight() == F(5, 2)
    assert L.satisfied((1, 0)) == F(1, 2) + 1 + 1
    with pytest.raises(ValueError):
        clause_set_from_json({"clauses": [{"op": "nand", "vars": [1]}]})
