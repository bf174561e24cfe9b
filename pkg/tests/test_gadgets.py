from fractions import Fraction as F
from itertools import product

import pytest

from extform import catalog, gadgets
from extform.catalog import ClauseSet, Graph, lit_clause, xor
from extform.errors import ReductionError, ScaleError

EDGE12 = Graph.on(3, [(1, 2)])


@pytest.mark.parametrize("name", ["maxcut-to-vertexcover", "maxcut-to-maxindep", "maxcut-to-max2sat",
                                  "maxcut-to-dicut", "xor2-to-conjsat", "maxcsp2-embed-xor2",
                                  "maxcut-to-minuncut", "maxcut-to-min2cnf"])
def test_gadgets_certify_at_n3(name):
    g = gadgets.GADGETS[name](3)
    assert g.report.ok and g.matrix is not None
    assert g.report.pairs_checked == g.report.instances_checked * len(g.source.solutions)


def test_vertex_cover_examples():
    g = gadgets.maxcut_to_vertexcover(3)
    H = g.beta_image(EDGE12)
    for s in [(1, 0, 0), (1, 0, 1)]:
        assert len(set(g.gamma_image(s)) & set(H.vertices)) == 2 * 1 - catalog.cut_value(EDGE12, s)
    empty = g.beta_image(Graph.on(3, []))
    assert empty.vertices == ()
    assert g.notes["alpha"] == -1 and g.notes["mu"] == 2


def test_maxindep_examples():
    g = gadgets.maxcut_to_maxindep(3)
    H = g.beta_image(EDGE12)
    assert len(set(g.gamma_image((1, 0, 0))) & set(H.vertices)) == 1
    assert len(set(g.gamma_image((1, 1, 0))) & set(H.vertices)) == 0


def test_eps_guarantees():
    g = gadgets.maxcut_to_vertexcover(3, eps=F(1, 10))
    assert g.notes["tau1"] == F(9, 10) and g.notes["sigma1"] == F(6, 10)
    assert g.report.ok
    with pytest.raises(ValueError):
        gadgets.maxcut_to_vertexcover(3, eps=F(1, 2))


def test_max2sat_identity():
    g = gadgets.maxcut_to_max2sat(3)
    L = ClauseSet.unit([xor(1, 2, 1), xor(1, 3, 1), xor(2, 3, 1)])
    T = g.beta_image(L)
    for s in product((0, 1), repeat=3):
        assert T.satisfied(s) - L.satisfied(s) == 3
    one = ClauseSet.unit([xor(1, 2, 1)])
    assert g.beta_image(one).satisfied((1, 0, 0)) == 2
    assert g.beta_image(one).satisfied((1, 1, 0)) == 1


def test_conjsat_identity():
    g = gadgets.xor2_to_conjsat(2)
    for b in (0, 1):
        L = ClauseSet.unit([xor(1, 2, b)])
        T = g.beta_image(L)
        for s in product((0, 1), repeat=2):
            assert T.satisfied(s) == L.satisfied(s)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_embedding_at_several_sizes(n):
    assert gadgets.maxcsp2_embed_xor2(n, max_clauses=2).report.ok


def test_min2cnf_rules():
    # the same-sign pair fits alpha = -1, mu = 1; the mixed-sign pair tracks the cut itself
    assert gadgets.fit_min2cnf_constants("same-sign") == (-1, 1)
    assert gadgets.fit_min2cnf_constants("mixed-sign") == (1, 0)
    with pytest.raises(ReductionError):
        gadgets.maxcut_to_min2cnf(3, rule="mixed-sign")
    g = gadgets.maxcut_to_min2cnf(3, weight_values=(1, F(1, 2)), max_clauses=2)
    assert g.report.ok


def test_minuncut_single_clause():
    g = gadgets.maxcut_to_minuncut(2)
    L = ClauseSet.unit([xor(1, 2, 1)])
    assert g.beta_image(L).unsatisfied((1, 0)) == 0
    assert g.beta_image(L).unsatisfied((1, 1)) == 1


def test_multicut_constants():
    assert gadgets.multicut_printed_constant(3) == 14
    assert gadgets.multicut_edges_per_edge(3) == 21
    assert gadgets.multicut_shift(3) == 20
    layout = gadgets.MulticutLayout.make(2, 3)
    assert len(layout.vertices) == gadgets.multicut_vertex_count(2, 3) == 12
    H = layout.beta(Graph.on(2, [(1, 2)]))
    assert len(H.edges) == 21


def test_multicut_decomposed_optimum():
    layout = gadgets.MulticutLayout.make(3, 3)
    for edges in ([(1, 2)], [(1, 2), (1, 3)], [(1, 2), (1, 3), (2, 3)]):
        G = Graph.on(3, edges)
        assert gadgets.multicut_max_decomposed(layout, G) == catalog.max_cut(G) + 20 * len(edges)


def test_multicut_gadget_n2():
    g = gadgets.maxcut_to_multicut(2)
    assert g.report.ok
    assert g.notes["printed_constant"] == 14 and g.notes["measured_shift"] == 20
    with pytest.raises(ScaleError):
        gadgets.maxcut_to_multicut(3)


def test_hamiltonian_gadget():
    g = gadgets.matching_to_hamiltonian(4)
    assert g.report.ok and g.notes["cycles"] == 2520
    wm = gadgets.ladder_graph(Graph.on(4, [(1, 2)]), 4)
    C = gadgets.matching_cycle(((1, 2), (3, 4)), 4)
    assert catalog.hamiltonian_value(wm, C) == 11
    assert g.target_guarantees.C[gadgets.ladder_graph(Graph.on(4, []), 4)] == 10
    assert g.target_guarantees.C[gadgets.ladder_graph(catalog.complete_graph(range(1, 5)), 4)] == 12


def test_cycle_bound_parts():
    G = catalog.complete_graph(range(1, 5))
    for c in catalog.hamiltonian_cycles(gadgets.ladder_vertices(4))[:200]:
        parts = gadgets.cycle_bound_parts(G, c, 4)
        assert all(parts[k] for k in parts if k.endswith("_ok"))
