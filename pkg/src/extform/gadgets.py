"""Concrete reductions: conflict graphs, clause gadgets, multicut copies, Hamiltonian ladders.

Every builder returns a :class:`GadgetResult` that has already passed
``verify_reduction`` and the slack-matrix identity.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb

from .catalog import (
    Clause,
    ClauseSet,
    Graph,
    WeightedGraph,
    build_csp,
    build_hamiltonian_on,
    build_matching,
    build_max_indep,
    build_maxcut,
    build_min_csp,
    build_multicut_on,
    build_vertex_cover,
    compatible,
    conflict_graph,
    cycle_edges,
    lit_clause,
    table_clause,
)
from .core import (
    Guarantees,
    ProblemSpec,
    check_scale,
    exact_guarantees,
    proportional_guarantees,
)
from .errors import InternalConsistencyError, ReductionError, ScaleError
from .reduce import (
    MatrixReduction,
    Reduction,
    ReductionReport,
    fit_affine,
    matrix_reduction,
    simple_reduction,
    simple_target_rates,
    verify_reduction,
)

ONE = Fraction(1)


@dataclass
class GadgetResult:
    source: ProblemSpec
    source_guarantees: Guarantees
    target: ProblemSpec
    target_guarantees: Guarantees
    reduction: Reduction
    report: ReductionReport
    matrix: MatrixReduction | None
    notes: dict = field(default_factory=dict)

    def beta_image(self, f1):
        terms, _ = self.reduction.beta[f1]
        return terms[0][0]

    def gamma_image(self, s1):
        return self.reduction.gamma[s1][0][0]


def _guarantee_rates(eps):
    """Full sweep (1, 1) by default; ``eps`` gives (1 - eps, 1/2 + eps)."""
    if eps is None:
        return ONE, ONE
    eps = Fraction(eps)
    if not 0 < eps < Fraction(1, 4):
        raise ValueError("eps must lie in (0, 1/4)")
    return 1 - eps, Fraction(1, 2) + eps


def _certify(P1, G1, P2, G2, red, notes, check_matrix=True) -> GadgetResult:
    Reduction.create(P1, P2, red.beta, red.gamma, G1, G2)
    report = verify_reduction(P1, G1, P2, G2, red)
    if not report.ok:
        raise ReductionError(f"gadget failed verification: {report.first()}")
    mr = matrix_reduction(red, P1, G1, P2, G2) if check_matrix else None
    return GadgetResult(P1, G1, P2, G2, red, report, mr, notes)


def _simple_gadget(P1, P2, beta_fn, gamma_fn, alpha, mu, tau1, sigma1, notes, check_matrix=True):
    G1 = proportional_guarantees(P1, tau1, sigma1)
    red = simple_reduction(beta_fn, gamma_fn, alpha, mu, P1, P2)
    data = red.meta["simple"]
    tau2, sigma2 = simple_target_rates(data, tau1, sigma1)
    G2 = proportional_guarantees(P2, tau2, sigma2)
    notes = dict(notes)
    notes.update({
        "alpha": data.alpha, "mu": data.mu, "kappa": data.kappa,
        "size_factor_abs_alpha_plus_mu": data.size_factor_bound,
        "tau1": Fraction(tau1), "sigma1": Fraction(sigma1), "tau2": tau2, "sigma2": sigma2,
    })
    return _certify(P1, G1, P2, G2, red, notes, check_matrix)


# ---------------------------------------------------------------- conflict graph gadgets


def _conflict_parts(n, Delta):
    P1 = build_maxcut(n, Delta)
    H = conflict_graph(n)

    def beta_fn(K: Graph) -> Graph:
        return H.induced(v for v in H.vertices if (v[0][0], v[1][0]) in set(K.edges))

    return P1, H, beta_fn


def _assignment(s):
    return tuple((i + 1, v) for i, v in enumerate(s))


def maxcut_to_vertexcover(n: int, Delta: int | None = None, eps=None, check_matrix=True) -> GadgetResult:
    """MaxCUT[Delta] to VertexCover[2 Delta - 1] on the conflict graph; alpha = -1, mu = 2."""
    if n < 2:
        raise ValueError("n >= 2 required")
    Delta = n - 1 if Delta is None else Delta
    P1, H, beta_fn = _conflict_parts(n, Delta)
    images = [beta_fn(K) for K in P1.instances]
    for K, HK in zip(P1.instances, images):
        if len(HK.vertices) != 2 * len(K.edges):
            raise InternalConsistencyError("|V(H(K))| != 2|E(K)|")
        if HK.max_degree() > max(2 * Delta - 1, 0):
            raise InternalConsistencyError("H(K) exceeds degree 2 Delta - 1")
    P2 = build_vertex_cover(H, 2 * Delta - 1, instances=list(dict.fromkeys(images)))

    def gamma_fn(s):
        full = _assignment(s)
        return tuple(v for v in H.vertices if not compatible(v, full))

    tau1, sigma1 = _guarantee_rates(eps)
    return _simple_gadget(P1, P2, beta_fn, gamma_fn, -1, 2, tau1, sigma1,
                          {"gadget": "maxcut-to-vertexcover", "n": n, "Delta": Delta}, check_matrix)


def maxcut_to_maxindep(n: int, Delta: int | None = None, eps=None, check_matrix=True) -> GadgetResult:
    """MaxCUT[Delta] to MaxIndep[2 Delta - 1] on the conflict graph; alpha = 1, mu = 0."""
    if n < 2:
        raise ValueError("n >= 2 required")
    Delta = n - 1 if Delta is None else Delta
    P1, H, beta_fn = _conflict_parts(n, Delta)
    images = [beta_fn(K) for K in P1.instances]
    P2 = build_max_indep(H, 2 * Delta - 1, instances=list(dict.fromkeys(images)))

    def gamma_fn(s):
        full = _assignment(s)
        return tuple(v for v in H.vertices if compatible(v, full))

    tau1, sigma1 = _guarantee_rates(eps)
    return _simple_gadget(P1, P2, beta_fn, gamma_fn, 1, 0, tau1, sigma1,
                          {"gadget": "maxcut-to-maxindep", "n": n, "Delta": Delta}, check_matrix)


# ---------------------------------------------------------------- clause gadgets


def _pairs(L: ClauseSet):
    for c, w in zip(L.clauses, L.weights):
        if c.op != "xor" or len(c.vars) != 2:
            raise ReductionError(f"expected a 2-XOR clause, got {c}")
        yield c.vars[0], c.vars[1], c.payload[0], w


def _expand(rule):
    def beta_fn(L: ClauseSet) -> ClauseSet:
        return ClauseSet.weighted([(c, w) for i, j, b, w in _pairs(L) for c in rule(i, j, b)])
    return beta_fn


def _cut_source(n, max_clauses, weight_values):
    return build_csp("CUT", n, max_clauses=max_clauses, weight_values=weight_values)


def _identity(s):
    return s


def maxcut_to_max2sat(n: int, max_clauses: int | None = None, weight_values=(1,), eps=None,
                      check_matrix=True) -> GadgetResult:
    """Each cut clause becomes (x_i or x_j) and (not x_i or not x_j); alpha = 1, mu = 1."""
    P1 = _cut_source(n, max_clauses, weight_values)
    beta_fn = _expand(lambda i, j, b: [lit_clause("or", [(i, 0), (j, 0)]), lit_clause("or", [(i, 1), (j, 1)])])
    P2 = build_csp("SAT", n, 2, instances=list(dict.fromkeys(beta_fn(L) for L in P1.instances)))
    tau1, sigma1 = _guarantee_rates(eps)
    return _simple_gadget(P1, P2, beta_fn, _identity, 1, 1, tau1, sigma1,
                          {"gadget": "maxcut-to-max2sat", "n": n}, check_matrix)


def maxcut_to_dicut(n: int, max_clauses: int | None = None, weight_values=(1,), eps=None,
                    check_matrix=True) -> GadgetResult:
    """Each cut clause becomes the two directed arcs (not x_i and x_j), (x_i and not x_j)."""
    P1 = _cut_source(n, max_clauses, weight_values)
    beta_fn = _expand(lambda i, j, b: [lit_clause("and", [(i, 1), (j, 0)]), lit_clause("and", [(i, 0), (j, 1)])])
    P2 = build_csp("DICUT", n, instances=list(dict.fromkeys(beta_fn(L) for L in P1.instances)))
    tau1, sigma1 = _guarantee_rates(eps)
    return _simple_gadget(P1, P2, beta_fn, _identity, 1, 0, tau1, sigma1,
                          {"gadget": "maxcut-to-dicut", "n": n}, check_matrix)


def _xor_dnf(i, j, b):
    if b == 1:
        return [lit_clause("and", [(i, 0), (j, 1)]), lit_clause("and", [(i, 1), (j, 0)])]
    return [lit_clause("and", [(i, 0), (j, 0)]), lit_clause("and", [(i, 1), (j, 1)])]


def xor2_to_conjsat(n: int, max_clauses: int | None = 4, weight_values=(1,), eps=None,
                    check_matrix=True) -> GadgetResult:
    """Each 2-XOR clause becomes its two satisfying conjunctions; sizes double."""
    P1 = build_csp("XOR", n, 2, max_clauses=max_clauses, weight_values=weight_values)
    beta_fn = _expand(_xor_dnf)
    P2 = build_csp("CONJ-2", n, instances=list(dict.fromkeys(beta_fn(L) for L in P1.instances)))
    tau1, sigma1 = _guarantee_rates(eps)
    return _simple_gadget(P1, P2, beta_fn, _identity, 1, 0, tau1, sigma1,
                          {"gadget": "xor2-to-conjsat", "n": n}, check_matrix)


def maxcsp2_embed_xor2(n: int, max_clauses: int | None = 4, weight_values=(1,), eps=None,
                       check_matrix=True) -> GadgetResult:
    """2-XOR instances viewed as general 2-CSP instances (truth-table clauses)."""
    P1 = build_csp("XOR", n, 2, max_clauses=max_clauses, weight_values=weight_values)

    def table(i, j, b):
        return [table_clause(lambda a: (a[i] + a[j]) % 2 == b, (i, j))]

    beta_fn = _expand(table)
    P2 = build_csp("CSP-2", n, instances=list(dict.fromkeys(beta_fn(L) for L in P1.instances)))
    tau1, sigma1 = _guarantee_rates(eps)
    return _simple_gadget(P1, P2, beta_fn, _identity, 1, 0, tau1, sigma1,
                          {"gadget": "maxcsp2-embed-xor2", "n": n}, check_matrix)


def maxcut_to_minuncut(n: int, max_clauses: int | None = None, weight_values=(1,), eps=None,
                       check_matrix=True) -> GadgetResult:
    """Same clauses, minimizing the unsatisfied weight; alpha = -1, mu = 1."""
    P1 = _cut_source(n, max_clauses, weight_values)
    P2 = build_min_csp("MinUnCUT", n, instances=list(P1.instances))
    tau1, sigma1 = _guarantee_rates(eps)
    return _simple_gadget(P1, P2, _identity, _identity, -1, 1, tau1, sigma1,
                          {"gadget": "maxcut-to-minuncut", "n": n}, check_matrix)


def _literal_pair(i, j, b):
    return [lit_clause("or", [(i, 0), (j, 0)]), lit_clause("or", [(i, 1), (j, 1)])]


def _mixed_pair(i, j, b):
    return [lit_clause("or", [(i, 0), (j, 1)]), lit_clause("or", [(i, 1), (j, 0)])]


MIN2CNF_RULES = {"same-sign": _literal_pair, "mixed-sign": _mixed_pair}


def fit_min2cnf_constants(rule: str = "same-sign", weight_values=(1, 2)) -> tuple[Fraction, Fraction] | None:
    """Fit (alpha, mu) in unsat_{beta(L)}(s) = alpha cut_L(s) + mu |L| by brute force at n = 2.

    Returns None when no affine law fits. Only laws with alpha < 0 make a
    valid max-to-min reduction.
    """
    P1 = _cut_source(2, None, weight_values)
    beta_fn = _expand(MIN2CNF_RULES[rule])
    samples = []
    for L in P1.instances:
        T = beta_fn(L)
        for s in P1.solutions:
            samples.append((L.satisfied(s), L.total_weight(), T.unsatisfied(s)))
    return fit_affine(samples)


def maxcut_to_min2cnf(n: int, max_clauses: int | None = None, weight_values=(1,), eps=None,
                      rule: str = "same-sign", check_matrix=True) -> GadgetResult:
    """Each weighted cut clause becomes two 2-clauses with the same weight.

    The constants are fitted by the n = 2 oracle before building and must
    have alpha < 0.
    """
    fitted = fit_min2cnf_constants(rule)
    if fitted is None or fitted[0] >= 0:
        raise ReductionError(f"clause rule {rule!r} gives no max-to-min affine law: {fitted}")
    alpha, mu = fitted
    P1 = _cut_source(n, max_clauses, weight_values)
    beta_fn = _expand(MIN2CNF_RULES[rule])
    P2 = build_min_csp("Min2CNF", n, instances=list(dict.fromkeys(beta_fn(L) for L in P1.instances)))
    tau1, sigma1 = _guarantee_rates(eps)
    return _simple_gadget(P1, P2, beta_fn, _identity, alpha, mu, tau1, sigma1,
                          {"gadget": "maxcut-to-min2cnf", "n": n, "rule": rule,
                           "oracle_fit": [alpha, mu]}, check_matrix)


# ---------------------------------------------------------------- multicut


def multicut_printed_constant(k: int) -> int:
    """The printed per-edge constant binom(k-2,2)(binom(k+2,2)-3) + 2(k-2)(binom(k+2,2)-3)."""
    e = comb(k + 2, 2) - 3
    return comb(k - 2, 2) * e + 2 * (k - 2) * e


def multicut_edges_per_edge(k: int) -> int:
    return (comb(k + 2, 2) - 3) * (1 + 2 * (k - 2) + comb(k - 2, 2))


def multicut_shift(k: int) -> int:
    """|E(beta(G))| / |E(G)| - 1: the exact per-edge shift of the value identity."""
    return multicut_edges_per_edge(k) - 1


def multicut_vertex_count(n: int, k: int) -> int:
    return n + (k - 2) + k * (comb(k - 2, 2) + 2 * (k - 2) + 1) * comb(n, 2)


@dataclass
class MulticutLayout:
    """Vertex universe and copy slots of the multicut gadget.

    Hubs are ("h", i) for i in [n] and ("h", -t) for t = 3..k. Every potential
    edge e of K_n owns a block of copies; copy x of hub pair (p, q) has private
    vertices ("c", e, x, 0) = (p), ("c", e, x, 1) = (q) and ("c", e, x, 1 + t).
    """

    n: int
    k: int
    vertices: tuple
    blocks: dict  # edge -> list of (x, p, q)

    @classmethod
    def make(cls, n: int, k: int) -> "MulticutLayout":
        if k < 3 or n < 2:
            raise ValueError("need k >= 3 and n >= 2")
        negs = [-t for t in range(3, k + 1)]
        verts = [("h", i) for i in range(1, n + 1)] + [("h", t) for t in sorted(negs)]
        blocks = {}
        for e, (i, j) in enumerate(combinations(range(1, n + 1), 2)):
            pairs = [(i, j)] + [(v, t) for t in negs for v in (i, j)] + list(combinations(negs, 2))
            blocks[(i, j)] = [(x, p, q) for x, (p, q) in enumerate(pairs)]
            for x, _, _ in blocks[(i, j)]:
                verts += [("c", e, x, r) for r in range(k)]
        layout = cls(n, k, tuple(sorted(verts)), blocks)
        if len(layout.vertices) != multicut_vertex_count(n, k):
            raise InternalConsistencyError("multicut vertex count mismatch")
        return layout

    def edge_index(self, edge) -> int:
        return list(self.blocks).index(edge)

    def copy_edges(self, e: int, x: int, p: int, q: int) -> list[tuple]:
        k = self.k
        nodes = [("h", p), ("h", q)] + [("c", e, x, r) for r in range(k)]
        skip = {
            frozenset((("h", p), ("c", e, x, 0))),
            frozenset((("h", p), ("h", q))),
            frozenset((("c", e, x, 1), ("h", q))),
        }
        return [(a, b) for a, b in combinations(nodes, 2) if frozenset((a, b)) not in skip]

    def beta(self, G: Graph) -> Graph:
        edges = []
        for edge in G.edges:
            e = self.edge_index(edge)
            for x, p, q in self.blocks[edge]:
                edges += self.copy_edges(e, x, p, q)
        return Graph.make(self.vertices, edges)

    def hub_cells(self, s) -> dict:
        cells = {i: s[i - 1] + 1 for i in range(1, self.n + 1)}
        cells.update({-t: t for t in range(3, self.k + 1)})
        return cells

    def local_cells(self, cp: int, cq: int) -> list[int]:
        """Cells of the k private vertices of one copy, given the hub cells."""
        if cp != cq:
            first, second = cp, cq
        else:
            first, second = cp, min(c for c in range(1, self.k + 1) if c != cp)
        rest = [c for c in range(1, self.k + 1) if c not in (first, second)]
        return [first, second] + rest

    def gamma(self, s) -> tuple:
        cells = self.hub_cells(s)
        assign = {("h", v): c for v, c in cells.items()}
        for edge, copies in self.blocks.items():
            e = self.edge_index(edge)
            for x, p, q in copies:
                for r, c in enumerate(self.local_cells(cells[p], cells[q])):
                    assign[("c", e, x, r)] = c
        return tuple(assign[v] for v in self.vertices)


def multicut_max_decomposed(layout: MulticutLayout, G: Graph) -> int:
    """Exact max k-multicut of beta(G): enumerate hub cells, then the best extension per copy."""
    k = layout.k
    hubs = list(range(1, layout.n + 1)) + [-t for t in range(3, k + 1)]
    check_scale(k ** len(hubs), "multicut hub assignments")
    template = layout.copy_edges(0, 0, 1, 2)
    local: dict = {}

    def best(cp, cq):
        key = (cp, cq)
        if key not in local:
            top = 0
            for priv in product(range(1, k + 1), repeat=k):
                cell = {("h", 1): cp, ("h", 2): cq}
                cell.update({("c", 0, 0, r): c for r, c in enumerate(priv)})
                top = max(top, sum(1 for a, b in template if cell[a] != cell[b]))
            local[key] = top
        return local[key]

    copies = [(p, q) for edge in G.edges for _, p, q in layout.blocks[edge]]
    top = 0
    for cells in product(range(1, k + 1), repeat=len(hubs)):
        c = dict(zip(hubs, cells))
        top = max(top, sum(best(c[p], c[q]) for p, q in copies))
    return top


def maxcut_to_multicut(n: int, k: int = 3, eps=None, check_matrix=True) -> GadgetResult:
    """MaxCUT on n vertices to MaxMULTICUT-k on the gadget universe.

    The measured shift per edge is multicut_shift(k); the printed constant
    multicut_printed_constant(k) is recorded in the notes for comparison.
    """
    layout = MulticutLayout.make(n, k)
    check_scale(k ** len(layout.vertices), f"{k}-partitions of {len(layout.vertices)} vertices")
    P1 = build_maxcut(n)
    images = list(dict.fromkeys(layout.beta(G) for G in P1.instances))
    P2 = build_multicut_on(layout.vertices, k, images, f"MaxMULTICUT-{k}(m={len(layout.vertices)})")
    tau1, sigma1 = _guarantee_rates(eps)
    return _simple_gadget(P1, P2, layout.beta, layout.gamma, 1, multicut_shift(k), tau1, sigma1,
                          {"gadget": "maxcut-to-multicut", "n": n, "k": k, "m": len(layout.vertices),
                           "printed_constant": multicut_printed_constant(k),
                           "measured_shift": multicut_shift(k), "layout": layout}, check_matrix)


# ---------------------------------------------------------------- Hamiltonian cycles


def ladder_vertices(n2: int) -> list[tuple]:
    return [(side, j) for side in (0, 1) for j in range(1, n2 + 1)]


def ladder_graph(G: Graph, n2: int) -> WeightedGraph:
    """Rungs weigh 2, the (1, .) clique weighs 1, copies of G on the (0, .) side weigh 1."""
    w = {}
    for j in range(1, n2 + 1):
        w[((0, j), (1, j))] = Fraction(2)
    for j, k in combinations(range(1, n2 + 1), 2):
        w[((1, j), (1, k))] = ONE
    for j, k in G.edges:
        w[((0, j), (0, k))] = ONE
    edges = sorted(w)
    return WeightedGraph(Graph(tuple(ladder_vertices(n2)), tuple(edges)), tuple(w[e] for e in edges))


def canonical_cycle(seq) -> tuple:
    n = len(seq)
    i = seq.index(min(seq))
    rot = tuple(seq[i:]) + tuple(seq[:i])
    if rot[1] > rot[-1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    if len(set(rot)) != n:
        raise ValueError("not a cycle")
    return rot


def matching_cycle(M, n2: int) -> tuple:
    """C_M: rungs, the matching on the (0, .) side, and n edges on the (1, .) side.

    Segments (1,j)-(0,j)-(0,k)-(1,k) are ordered by j and chained in that order.
    """
    seq = []
    for j, k in sorted(M):
        seq += [(1, j), (0, j), (0, k), (1, k)]
    return canonical_cycle(seq)


def cycle_bound_parts(G: Graph, cycle, n2: int) -> dict:
    """Per-cycle quantities k, l, m and the three weight contributions, each checked."""
    n = n2 // 2
    Gt = ladder_graph(G, n2)
    wm = Gt.weight_map()
    ce = cycle_edges(cycle)
    zero_side = [e for e in ce if e[0][0] == 0 and e[1][0] == 0]
    one_side = [e for e in ce if e[0][0] == 1 and e[1][0] == 1]
    cross = [e for e in ce if e[0][0] != e[1][0]]
    adj = {(0, j): set() for j in range(1, n2 + 1)}
    for a, b in zero_side:
        adj[a].add(b)
        adj[b].add(a)
    seen, comps = set(), []
    for v in adj:
        if v in seen:
            continue
        stack, comp = [v], set()
        while stack:
            u = stack.pop()
            if u in comp:
                continue
            comp.add(u)
            stack.extend(adj[u] - comp)
        seen |= comp
        comps.append(comp)
    gedges = {((0, a), (0, b)) for a, b in G.edges}
    k = l = m = 0
    for comp in comps:
        es = [e for e in zero_side if e[0] in comp]
        if not es:
            m += 1
        elif all(e in gedges for e in es):
            k += 1
        else:
            l += 1
    w0 = sum((wm.get(e, 0) for e in zero_side), Fraction(0))
    w1 = sum((wm.get(e, 0) for e in one_side), Fraction(0))
    w01 = sum((wm.get(e, 0) for e in cross), Fraction(0))
    out = {
        "k": k, "l": l, "m": m,
        "zero_side": w0, "one_side": w1, "cross": w01,
        "zero_side_ok": w0 <= 2 * n - k - 2 * l - m,
        "one_side_ok": w1 == 2 * n - (k + l + m) and len(one_side) == 2 * n - (k + l + m),
        "cross_ok": w01 <= 4 * k + 4 * l + 2 * m and len(cross) == 2 * (k + l + m),
        "total_ok": w0 + w1 + w01 <= 4 * n + 2 * k + l,
        "k_plus_l_ok": k + l <= n,
    }
    return out


def matching_to_hamiltonian(n2: int, check_matrix=True) -> GadgetResult:
    """Matching on K_{n2} to max-weight Hamiltonian cycles on the 2 n2-vertex ladder; shift 5n."""
    if n2 < 2 or n2 % 2:
        raise ValueError("n2 must be even and >= 2")
    from math import factorial

    cycles = factorial(2 * n2 - 1) // 2
    check_scale(cycles * 2 ** comb(n2, 2), f"Hamiltonian gadget n2={n2}")
    n = n2 // 2
    P1 = build_matching(n2)
    G1 = exact_guarantees(P1)
    images = [ladder_graph(G, n2) for G in P1.instances]
    P2 = build_hamiltonian_on(ladder_vertices(n2), images, f"Hamiltonian(ladder 2n={n2})")
    G2 = exact_guarantees(P2)
    beta = {G: ([(Gt, 1)], -5 * n) for G, Gt in zip(P1.instances, images)}
    gamma = {M: [(matching_cycle(M, n2), 1)] for M in P1.solutions}
    red = Reduction(beta, gamma, (P1.sense, P2.sense))
    for G, Gt in zip(P1.instances, images):
        if G2.C[Gt] != 5 * n + G1.C[G]:
            raise InternalConsistencyError("max ladder cycle weight != 5n + matching number")
    return _certify(P1, G1, P2, G2, red,
                    {"gadget": "matching-to-hamiltonian", "n2": n2, "shift": 5 * n, "cycles": cycles},
                    check_matrix)


GADGETS = {
    "maxcut-to-vertexcover": maxcut_to_vertexcover,
    "maxcut-to-maxindep": maxcut_to_maxindep,
    "maxcut-to-multicut": maxcut_to_multicut,
    "maxcut-to-max2sat": maxcut_to_max2sat,
    "maxcut-to-dicut": maxcut_to_dicut,
    "xor2-to-conjsat": xor2_to_conjsat,
    "maxcsp2-embed-xor2": maxcsp2_embed_xor2,
    "maxcut-to-min2cnf": maxcut_to_min2cnf,
    "maxcut-to-minuncut": maxcut_to_minuncut,
    "matching-to-hamiltonian": matching_to_hamiltonian,
}
