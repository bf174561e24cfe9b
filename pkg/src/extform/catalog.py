"""Constructors for the concrete problems: cuts, CSPs, graph problems, juntas."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb, factorial
from typing import Hashable, Iterable, Sequence

import numpy as np

from .core import ProblemSpec, Sense, check_scale
from .errors import ScaleError

# ---------------------------------------------------------------- graphs


def _edge(u, v) -> tuple:
    if u == v:
        raise ValueError(f"loop at {u!r}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, order=True)
class Graph:
    """Simple graph; edges are stored as sorted pairs."""

    vertices: tuple
    edges: tuple

    @classmethod
    def make(cls, vertices: Iterable, edges: Iterable) -> "Graph":
        vs = tuple(sorted(set(vertices)))
        es = tuple(sorted({_edge(u, v) for u, v in edges}))
        vset = set(vs)
        for u, v in es:
            if u not in vset or v not in vset:
                raise ValueError(f"edge {(u, v)} leaves the vertex set")
        return cls(vs, es)

    @classmethod
    def on(cls, n: int, edges: Iterable = ()) -> "Graph":
        return cls.make(range(1, n + 1), edges)

    def degree(self, v) -> int:
        return sum(1 for e in self.edges if v in e)

    def max_degree(self) -> int:
        return max((self.degree(v) for v in self.vertices), default=0)

    def induced(self, vs: Iterable) -> "Graph":
        keep = set(vs)
        return Graph.make(keep, [e for e in self.edges if e[0] in keep and e[1] in keep])

    def neighbors(self, v) -> set:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}


@dataclass(frozen=True, order=True)
class WeightedGraph:
    """Graph with a rational weight on every edge (``weights`` aligned to ``base.edges``)."""

    base: Graph
    weights: tuple

    def __post_init__(self):
        if len(self.weights) != len(self.base.edges):
            raise ValueError("weights must match edges")
        if any(Fraction(w) < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative")

    def weight_map(self) -> dict:
        return dict(zip(self.base.edges, self.weights))


def all_graphs(vertices: Sequence, degree_bound: int | None = None) -> list[Graph]:
    """Every simple graph on the vertex set, by edge count then lexicographically."""
    pairs = list(combinations(sorted(vertices), 2))
    check_scale(2 ** len(pairs), f"graphs on {len(vertices)} vertices")
    out = []
    for m in range(len(pairs) + 1):
        for es in combinations(pairs, m):
            g = Graph(tuple(sorted(vertices)), es)
            if degree_bound is None or g.max_degree() <= degree_bound:
                out.append(g)
    return out


def complete_graph(vertices: Iterable) -> Graph:
    vs = sorted(vertices)
    return Graph.make(vs, combinations(vs, 2))


def cut_value(g: Graph, s: Sequence[int], offset: int = 1) -> int:
    return sum(1 for i, j in g.edges if s[i - offset] != s[j - offset])


def is_vertex_cover(g: Graph, S) -> bool:
    S = set(S)
    return all(u in S or v in S for u, v in g.edges)


def is_independent(g: Graph, S) -> bool:
    S = set(S)
    return not any(u in S and v in S for u, v in g.edges)


def _subsets(items: Sequence) -> list[tuple]:
    return [c for m in range(len(items) + 1) for c in combinations(items, m)]


def independence_number(g: Graph) -> int:
    return max(len(S) for S in _subsets(g.vertices) if is_independent(g, S))


def min_vertex_cover_size(g: Graph) -> int:
    return min(len(S) for S in _subsets(g.vertices) if is_vertex_cover(g, S))


def matching_number(g: Graph) -> int:
    best = 0
    for m in range(1, len(g.vertices) // 2 + 1):
        found = any(
            len({v for e in es for v in e}) == 2 * m for es in combinations(g.edges, m)
        )
        if not found:
            break
        best = m
    return best


def max_cut(g: Graph) -> int:
    vs = g.vertices
    best = 0
    for bits in product((0, 1), repeat=len(vs)):
        side = dict(zip(vs, bits))
        best = max(best, sum(1 for u, v in g.edges if side[u] != side[v]))
    return best


# ---------------------------------------------------------------- cuts


def build_maxcut(n: int, degree_bound: int | None = None) -> ProblemSpec:
    if n < 2:
        raise ValueError("MaxCUT needs n >= 2")
    check_scale(2 ** n * 2 ** comb(n, 2), f"MaxCUT n={n}")
    sols = tuple(product((0, 1), repeat=n))
    insts = tuple(all_graphs(range(1, n + 1), degree_bound))
    name = f"MaxCUT(n={n})" if degree_bound is None else f"MaxCUT[{degree_bound}](n={n})"
    return ProblemSpec(
        name, sols, insts,
        value_fn=lambda g, s: cut_value(g, s),
        sense=Sense.MAXIMIZE,
        size_fn=lambda g: len(g.edges),
        meta={"problem": "maxcut", "n": n, "degree_bound": degree_bound},
    )


def _multicut_row(vertices: Sequence, k: int, sols_array: np.ndarray):
    pos = {v: i for i, v in enumerate(vertices)}

    def row(g: Graph):
        total = np.zeros(sols_array.shape[0], dtype=np.int64)
        for u, v in g.edges:
            total += sols_array[:, pos[u]] != sols_array[:, pos[v]]
        return total.tolist()

    return row


def build_multicut_on(vertices: Sequence, k: int, instances: Sequence[Graph], name: str) -> ProblemSpec:
    """MaxMULTICUT-k over an arbitrary labelled vertex set and instance list."""
    vertices = tuple(vertices)
    check_scale(k ** len(vertices) * max(1, len(instances)), name)
    sols = tuple(product(range(1, k + 1), repeat=len(vertices)))
    arr = np.array(sols, dtype=np.int8).reshape(len(sols), len(vertices))
    pos = {v: i for i, v in enumerate(vertices)}
    return ProblemSpec(
        name, sols, tuple(instances),
        value_fn=lambda g, p: sum(1 for u, v in g.edges if p[pos[u]] != p[pos[v]]),
        sense=Sense.MAXIMIZE,
        size_fn=lambda g: len(g.edges),
        row_fn=_multicut_row(vertices, k, arr),
        meta={"problem": "multicut", "k": k, "vertices": vertices},
    )


def build_multicut(n: int, k: int) -> ProblemSpec:
    if k < 3 or n < k:
        raise ValueError("MaxMULTICUT-k needs k >= 3 and n >= k")
    check_scale(k ** n * 2 ** comb(n, 2), f"MaxMULTICUT-{k} n={n}")
    p = build_multicut_on(range(1, n + 1), k, all_graphs(range(1, n + 1)), f"MaxMULTICUT-{k}(n={n})")
    p.meta["n"] = n  # type: ignore[index]
    return p


# ---------------------------------------------------------------- vertex cover / independent set


def _subset_key(S: tuple) -> tuple:
    return (len(S), S)


def build_vertex_cover(G: Graph, degree_bound: int | None = None,
                       instances: Sequence[Graph] | None = None) -> ProblemSpec:
    """VertexCover(G): vertex covers as solutions, induced subgraphs as instances."""
    check_scale(2 ** len(G.vertices), f"subsets of {len(G.vertices)} vertices")
    sols = tuple(sorted((S for S in _subsets(G.vertices) if is_vertex_cover(G, S)), key=_subset_key))
    if instances is None:
        instances = [G.induced(U) for U in sorted(_subsets(G.vertices), key=_subset_key)]
    insts = tuple(H for H in instances if degree_bound is None or H.max_degree() <= degree_bound)
    return ProblemSpec(
        "VertexCover" if degree_bound is None else f"VertexCover[{degree_bound}]",
        sols, insts,
        value_fn=lambda H, S: len(set(S) & set(H.vertices)),
        sense=Sense.MINIMIZE,
        size_fn=lambda H: len(H.vertices),
        meta={"problem": "vertex_cover", "graph": G, "degree_bound": degree_bound},
    )


def build_max_indep(G: Graph, degree_bound: int | None = None,
                    instances: Sequence[Graph] | None = None) -> ProblemSpec:
    check_scale(2 ** len(G.vertices), f"subsets of {len(G.vertices)} vertices")
    sols = tuple(sorted((S for S in _subsets(G.vertices) if is_independent(G, S)), key=_subset_key))
    if instances is None:
        instances = [G.induced(U) for U in sorted(_subsets(G.vertices), key=_subset_key)]
    insts = tuple(H for H in instances if degree_bound is None or H.max_degree() <= degree_bound)
    return ProblemSpec(
        "MaxIndep" if degree_bound is None else f"MaxIndep[{degree_bound}]",
        sols, insts,
        value_fn=lambda H, S: len(set(S) & set(H.vertices)),
        sense=Sense.MAXIMIZE,
        size_fn=lambda H: len(H.vertices),
        meta={"problem": "max_indep", "graph": G, "degree_bound": degree_bound},
    )


def indep_uniform_value(G: Graph, S) -> int:
    S = set(S)
    return len(S & set(G.vertices)) - sum(1 for u, v in G.edges if u in S and v in S)


def build_indep_uniform(n: int) -> ProblemSpec:
    """Independent set in the uniform model: all graphs with V(G) inside [n]."""
    if n < 2:
        raise ValueError("n >= 2 required")
    check_scale(sum(comb(n, u) * 2 ** comb(u, 2) for u in range(n + 1)) * 2 ** n, f"indep uniform n={n}")
    sols = tuple(sorted(_subsets(tuple(range(1, n + 1))), key=_subset_key))
    insts = [g for U in sorted(_subsets(tuple(range(1, n + 1))), key=_subset_key) for g in all_graphs(U)]
    return ProblemSpec(
        f"IndepUniform(n={n})", sols, tuple(insts),
        value_fn=indep_uniform_value,
        sense=Sense.MAXIMIZE,
        size_fn=lambda g: len(g.vertices),
        meta={"problem": "indep_uniform", "n": n},
    )


# ---------------------------------------------------------------- matching / Hamiltonian cycles


def perfect_matchings(vertices: Sequence) -> list[tuple]:
    """All perfect matchings as sorted edge tuples, in canonical recursive order."""
    vs = sorted(vertices)
    if not vs:
        return [()]
    first, rest = vs[0], vs[1:]
    out = []
    for i, partner in enumerate(rest):
        remaining = rest[:i] + rest[i + 1:]
        for m in perfect_matchings(remaining):
            out.append(tuple(sorted(((first, partner),) + m)))
    return out


def build_matching(n2: int, instances: Sequence[Graph] | None = None) -> ProblemSpec:
    if n2 < 2 or n2 % 2:
        raise ValueError("n2 must be even and >= 2")
    check_scale(2 ** comb(n2, 2), f"graphs on {n2} vertices")
    sols = tuple(perfect_matchings(range(1, n2 + 1)))
    insts = tuple(all_graphs(range(1, n2 + 1)) if instances is None else instances)
    return ProblemSpec(
        f"Matching(2n={n2})", sols, insts,
        value_fn=lambda g, M: len(set(M) & set(g.edges)),
        sense=Sense.MAXIMIZE,
        size_fn=lambda g: len(g.edges),
        meta={"problem": "matching", "n2": n2},
    )


def hamiltonian_cycles(vertices: Sequence) -> list[tuple]:
    """Canonical vertex sequences: start at the smallest vertex, second < last."""
    vs = sorted(vertices)
    if len(vs) < 3:
        raise ValueError("need at least 3 vertices")
    check_scale(factorial(len(vs) - 1) // 2, f"Hamiltonian cycles on {len(vs)} vertices")
    first, rest = vs[0], vs[1:]
    return [(first,) + p for p in permutations(rest) if p[0] < p[-1]]


def cycle_edges(cycle: Sequence) -> frozenset:
    return frozenset(_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))


def hamiltonian_value(G: WeightedGraph, cycle) -> Fraction:
    ce = cycle_edges(cycle)
    return sum((Fraction(w) for e, w in zip(G.base.edges, G.weights) if e in ce), Fraction(0))


def build_hamiltonian_on(vertices: Sequence, instances: Sequence[WeightedGraph], name: str) -> ProblemSpec:
    sols = tuple(hamiltonian_cycles(vertices))
    edge_sets = {c: cycle_edges(c) for c in sols}
    check_scale(len(sols) * len(instances), name)

    def row(G: WeightedGraph):
        wm = G.weight_map()
        return [sum((Fraction(wm[e]) for e in edge_sets[c] if e in wm), Fraction(0)) for c in sols]

    return ProblemSpec(
        name, sols, tuple(instances),
        value_fn=hamiltonian_value,
        sense=Sense.MAXIMIZE,
        size_fn=lambda G: sum((Fraction(w) for w in G.weights), Fraction(0)),
        row_fn=row,
        meta={"problem": "hamiltonian", "vertices": tuple(sorted(vertices))},
    )


def build_hamiltonian(n: int, weight_values: Sequence = (1, 2),
                      instances: Sequence[WeightedGraph] | None = None) -> ProblemSpec:
    """Max-weight Hamiltonian cycle on K_n; instances are weighted subgraphs."""
    if n < 3:
        raise ValueError("n >= 3 required")
    vs = tuple(range(1, n + 1))
    if instances is None:
        pairs = list(combinations(vs, 2))
        options = [None] + [Fraction(w) for w in weight_values if Fraction(w) != 0] \
            + ([Fraction(0)] if any(Fraction(w) == 0 for w in weight_values) else [])
        check_scale(len(options) ** len(pairs) * factorial(n - 1) // 2, f"Hamiltonian n={n}")
        instances = []
        for choice in product(options, repeat=len(pairs)):
            es = [(e, w) for e, w in zip(pairs, choice) if w is not None]
            instances.append(WeightedGraph(Graph(vs, tuple(e for e, _ in es)), tuple(w for _, w in es)))
    return build_hamiltonian_on(vs, instances, f"Hamiltonian(n={n})")


# ---------------------------------------------------------------- juntas


def junta_value(a: Sequence[int], b: Sequence[int]) -> int:
    t = sum(x * y for x, y in zip(a, b))
    return t - 2 * comb(t, 2)


def build_junta_family(n: int, k: int) -> ProblemSpec:
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    check_scale(comb(n, k) * 2 ** n, f"junta family n={n} k={k}")
    sols = tuple(product((0, 1), repeat=n))
    insts = tuple(
        tuple(1 if i in c else 0 for i in range(n)) for c in combinations(range(n), k)
    )
    return ProblemSpec(
        f"Juntas(n={n},k={k})", sols, insts,
        value_fn=junta_value,
        sense=Sense.MAXIMIZE,
        size_fn=lambda a: 1,
        meta={"problem": "junta", "n": n, "k": k},
    )


# ---------------------------------------------------------------- conflict graph


def conflict_graph(n: int) -> Graph:
    """Satisfying partial assignments of x_i + x_j = 1 (mod 2), edges between incompatible ones.

    A vertex is ``((i, v_i), (j, v_j))`` with ``i < j``.
    """
    if n < 2:
        raise ValueError("n >= 2 required")
    verts = [((i, a), (j, 1 - a)) for i, j in combinations(range(1, n + 1), 2) for a in (0, 1)]
    edges = [(s, t) for s, t in combinations(verts, 2) if not compatible(s, t)]
    return Graph.make(verts, edges)


def compatible(s, t) -> bool:
    d = dict(s)
    return all(d.get(var, val) == val for var, val in t)


def assignment_compatible(sigma, s: Sequence[int]) -> bool:
    """Is the partial assignment contained in the total assignment ``s`` (1-indexed)?"""
    return all(s[var - 1] == val for var, val in sigma)


# ---------------------------------------------------------------- clauses and CSPs


@dataclass(frozen=True)
class Clause:
    """A boolean constraint over 1-indexed variables.

    ``op`` is ``"xor"`` (payload ``(b,)``), ``"or"`` / ``"and"`` (payload:
    negation flag per variable) or ``"table"`` (payload: truth table bits,
    indexed by the assignment read as a binary number, first variable most
    significant).
    """

    op: str
    vars: tuple
    payload: tuple

    def __call__(self, s: Sequence[int]) -> int:
        vals = [s[v - 1] for v in self.vars]
        if self.op == "xor":
            return int(sum(vals) % 2 == self.payload[0])
        if self.op == "or":
            return int(any(x != neg for x, neg in zip(vals, self.payload)))
        if self.op == "and":
            return int(all(x != neg for x, neg in zip(vals, self.payload)))
        if self.op == "table":
            idx = 0
            for x in vals:
                idx = 2 * idx + x
            return self.payload[idx]
        raise ValueError(f"unknown clause op {self.op!r}")

    def sort_key(self) -> tuple:
        return (self.vars, self.op, self.payload)

    def __lt__(self, other: "Clause") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if self.op == "xor":
            return " ^ ".join(f"x{v}" for v in self.vars) + f" = {self.payload[0]}"
        if self.op in ("or", "and"):
            sym = " | " if self.op == "or" else " & "
            return sym.join(("~" if neg else "") + f"x{v}" for v, neg in zip(self.vars, self.payload))
        bits = "".join(map(str, self.payload))
        return f"T[{bits}](" + ",".join(f"x{v}" for v in self.vars) + ")"


def xor(i: int, j: int, b: int) -> Clause:
    vs = tuple(sorted((i, j)))
    return Clause("xor", vs, (b,))


def lit_clause(op: str, lits: Sequence[tuple[int, int]]) -> Clause:
    """``lits`` holds ``(var, negated)`` pairs."""
    lits = sorted(lits)
    if len({v for v, _ in lits}) != len(lits):
        raise ValueError("repeated variable in clause")
    return Clause(op, tuple(v for v, _ in lits), tuple(int(neg) for _, neg in lits))


def table_clause(fn, vars_: Sequence[int]) -> Clause:
    """Canonical truth-table clause of ``fn`` restricted to its essential variables."""
    vars_ = tuple(sorted(vars_))
    full = {bits: int(fn(dict(zip(vars_, bits)))) for bits in product((0, 1), repeat=len(vars_))}
    essential = tuple(
        v for idx, v in enumerate(vars_)
        if any(full[b] != full[b[:idx] + (1 - b[idx],) + b[idx + 1:]] for b in full)
    )
    table = []
    for bits in product((0, 1), repeat=len(essential)):
        assign = dict(zip(essential, bits))
        ref = tuple(assign.get(v, 0) for v in vars_)
        table.append(full[ref])
    return Clause("table", essential, tuple(table))


def as_table(c: Clause) -> Clause:
    return table_clause(lambda a: c([a.get(v, 0) for v in range(1, max(c.vars) + 1)]), c.vars)


@dataclass(frozen=True)
class ClauseSet:
    """A weighted clause list; 0/1 instances carry weight 1 on each present clause."""

    clauses: tuple
    weights: tuple

    @classmethod
    def unit(cls, clauses: Iterable[Clause]) -> "ClauseSet":
        cs = tuple(sorted(clauses, key=Clause.sort_key))
        return cls(cs, tuple(Fraction(1) for _ in cs))

    @classmethod
    def weighted(cls, pairs: Iterable[tuple[Clause, Fraction]]) -> "ClauseSet":
        ps = sorted(pairs, key=lambda cw: cw[0].sort_key())
        return cls(tuple(c for c, _ in ps), tuple(Fraction(w) for _, w in ps))

    def total_weight(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def satisfied(self, s) -> Fraction:
        return sum((w for c, w in zip(self.clauses, self.weights) if c(s)), Fraction(0))

    def unsatisfied(self, s) -> Fraction:
        return sum((w for c, w in zip(self.clauses, self.weights) if not c(s)), Fraction(0))

    def occurrences(self) -> dict:
        occ: dict = {}
        for c in self.clauses:
            for v in c.vars:
                occ[v] = occ.get(v, 0) + 1
        return occ

    def sort_key(self) -> tuple:
        return (len(self.clauses), [c.sort_key() for c in self.clauses], self.weights)


CSP_KINDS = ("XOR", "SAT", "DICUT", "CONJ-2", "CSP-2", "CUT")


def clause_family(kind: str, n: int, k: int = 2) -> list[Clause]:
    """The full constraint family of a CSP kind on variables x_1..x_n."""
    vs = range(1, n + 1)
    fam: list[Clause] = []
    if kind == "XOR":
        fam = [Clause("xor", c, (b,)) for c in combinations(vs, k) for b in (0, 1)]
    elif kind == "CUT":
        fam = [xor(i, j, 1) for i, j in combinations(vs, 2)]
    elif kind == "SAT":
        for width in range(1, k + 1):
            for c in combinations(vs, width):
                for negs in product((0, 1), repeat=width):
                    fam.append(Clause("or", c, negs))
    elif kind == "2CNF":
        fam = [Clause("or", c, negs) for c in combinations(vs, 2) for negs in product((0, 1), repeat=2)]
    elif kind == "CONJ-2":
        fam = [Clause("and", c, negs) for c in combinations(vs, 2) for negs in product((0, 1), repeat=2)]
    elif kind == "DICUT":
        fam = [lit_clause("and", [(i, 1), (j, 0)]) for i in vs for j in vs if i != j]
    elif kind == "CSP-2":
        seen = {}
        for i, j in combinations(vs, 2):
            for bits in product((0, 1), repeat=4):
                c = table_clause(lambda a, bits=bits, i=i, j=j: bits[2 * a[i] + a[j]], (i, j))
                seen.setdefault(c, None)
        fam = list(seen)
    else:
        raise ValueError(f"unknown CSP kind {kind!r}")
    return sorted(set(fam), key=Clause.sort_key)


def clause_instances(family: Sequence[Clause], max_clauses: int | None,
                     weight_values: Sequence = (1,), degree_bound: int | None = None) -> list[ClauseSet]:
    top = len(family) if max_clauses is None else min(max_clauses, len(family))
    count = sum(comb(len(family), m) * len(weight_values) ** m for m in range(top + 1))
    check_scale(count, f"clause subsets of a {len(family)}-clause family")
    weights = [Fraction(w) for w in weight_values]
    out = []
    for m in range(top + 1):
        for cs in combinations(family, m):
            for ws in product(weights, repeat=m):
                inst = ClauseSet(tuple(cs), tuple(ws))
                if degree_bound is not None and any(o > degree_bound for o in inst.occurrences().values()):
                    continue
                out.append(inst)
    return out


def _csp_problem(name, n, insts, sense, meta) -> ProblemSpec:
    sols = tuple(product((0, 1), repeat=n))
    fn = ClauseSet.satisfied if sense.is_max else ClauseSet.unsatisfied
    return ProblemSpec(
        name, sols, tuple(insts),
        value_fn=fn,
        sense=sense,
        size_fn=ClauseSet.total_weight,
        meta=meta,
    )


def build_csp(kind: str, n: int, k: int = 2, degree_bound: int | None = None,
              max_clauses: int | None = None, weight_values: Sequence = (1,),
              instances: Sequence[ClauseSet] | None = None) -> ProblemSpec:
    """Max-CSP over a named constraint family.

    ``kind`` is one of XOR (k-XOR), SAT (disjunctions of at most k literals),
    DICUT, CONJ-2, CSP-2 or CUT (the XOR clauses x_i + x_j = 1 only).
    """
    if n < 2:
        raise ValueError("n >= 2 required")
    if kind in ("XOR", "SAT") and k not in (2, 3):
        raise ValueError("k must be 2 or 3")
    check_scale(2 ** n, f"assignments on {n} variables")
    if instances is None:
        fam = clause_family(kind, n, k)
        if max_clauses is None and len(fam) > 20:
            raise ScaleError(f"{kind} family has {len(fam)} clauses; pass max_clauses")
        instances = clause_instances(fam, max_clauses, weight_values, degree_bound)
    label = {"XOR": f"MaxXOR-{k}", "SAT": f"MaxSAT-{k}"}.get(kind, f"Max{kind}")
    return _csp_problem(f"{label}(n={n})", n, instances, Sense.MAXIMIZE,
                        {"problem": "csp", "kind": kind, "n": n, "k": k})


MIN_CSP_FAMILIES = {"MinUnCUT": "XOR", "Min2CNF": "2CNF"}


def build_min_csp(kind: str, n: int, max_clauses: int | None = None,
                  weight_values: Sequence = (1,),
                  instances: Sequence[ClauseSet] | None = None) -> ProblemSpec:
    """Minimum CSP: minimize the weight of unsatisfied clauses."""
    if kind not in MIN_CSP_FAMILIES:
        raise ValueError(f"unknown min-CSP {kind!r}")
    if n < 2:
        raise ValueError("n >= 2 required")
    if instances is None:
        fam = clause_family(MIN_CSP_FAMILIES[kind], n, 2)
        if max_clauses is None and len(fam) > 20:
            raise ScaleError(f"{kind} family has {len(fam)} clauses; pass max_clauses")
        instances = clause_instances(fam, max_clauses, weight_values)
    return _csp_problem(f"{kind}(n={n})", n, instances, Sense.MINIMIZE,
                        {"problem": "min_csp", "kind": kind, "n": n})
