"""Approximate slack matrices and the closed-form slack submatrices."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb

from .catalog import (
    Graph,
    build_indep_uniform,
    build_junta_family,
    build_matching,
    complete_graph,
    perfect_matchings,
)
from .core import Guarantees, ProblemSpec, check_scale, sound_instances
from .errors import GuaranteeInfeasibleError, InternalConsistencyError
from .io import label, matrix_to_csv, matrix_to_json
from .rational import Matrix


@dataclass(eq=False)
class SlackMatrix:
    """Rows are sound instances, columns are solutions."""

    rows: list
    cols: list
    entries: Matrix
    problem: ProblemSpec | None = None
    guarantees: Guarantees | None = None
    meta: dict = field(default_factory=dict)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def entry(self, f, s) -> Fraction:
        return self.entries[self.rows.index(f)][self.cols.index(s)]

    def zero_per_row(self) -> bool:
        return all(any(v == 0 for v in r) for r in self.entries)

    def to_csv(self) -> str:
        return matrix_to_csv(self.entries, [label(f) for f in self.rows], [label(s) for s in self.cols])

    def to_json(self) -> str:
        return matrix_to_json(
            self.entries, [label(f) for f in self.rows], [label(s) for s in self.cols],
            problem=self.problem.name if self.problem else None,
        )


def build_slack(p: ProblemSpec, g: Guarantees) -> SlackMatrix:
    """The (C, S)-approximate slack matrix, rows restricted to sound instances."""
    g.check_order(p.sense)
    rows = sound_instances(p, g)
    entries = []
    for f in rows:
        c = Fraction(g.C[f])
        vals = p.value_row(f)
        r = [c - v for v in vals] if p.sense.is_max else [v - c for v in vals]
        neg = next((j for j, v in enumerate(r) if v < 0), None)
        if neg is not None:
            raise GuaranteeInfeasibleError(
                f"{p.name}: C({label(f)}) = {c} but val = {vals[neg]} at {label(p.solutions[neg])}"
            )
        entries.append(r)
    return SlackMatrix(rows, list(p.solutions), entries, p, g)


def _crossing(M, U) -> int:
    return sum(1 for u, v in M if (u in U) != (v in U))


def _odd_sets(n2: int) -> list[tuple]:
    return [U for size in range(3, n2 + 1, 2) for U in combinations(range(1, n2 + 1), size)]


def matching_slack_submatrix(n2: int, verify: bool = True) -> SlackMatrix:
    """Rows K_U for odd |U| >= 3, entries (|M cut by U| - 1) / 2."""
    if n2 < 4 or n2 % 2:
        raise ValueError("n2 must be even and >= 4")
    sets = _odd_sets(n2)
    matchings = perfect_matchings(range(1, n2 + 1))
    entries = [[Fraction(_crossing(M, set(U)) - 1, 2) for M in matchings] for U in sets]
    instances = [Graph(tuple(range(1, n2 + 1)), complete_graph(U).edges) for U in sets]
    p = build_matching(n2, instances=instances)
    C = {K: Fraction(len(U) - 1, 2) for K, U in zip(instances, sets)}
    g = Guarantees(C, dict(C))
    out = SlackMatrix(instances, list(matchings), entries, p, g, {"odd_sets": sets})
    if verify:
        ref = build_slack(p, g)
        if ref.rows != out.rows or ref.entries != out.entries:
            raise InternalConsistencyError("closed-form matching slack disagrees with the generic slack")
    return out


def junta_slack(n: int, k: int, verify: bool = True) -> SlackMatrix:
    """Entries (1 - a.b)^2 for |a| = k and b in {0,1}^n."""
    p = build_junta_family(n, k)
    entries = [[Fraction((1 - sum(x * y for x, y in zip(a, b))) ** 2) for b in p.solutions]
               for a in p.instances]
    one = {a: Fraction(1) for a in p.instances}
    g = Guarantees(one, dict(one))
    out = SlackMatrix(list(p.instances), list(p.solutions), entries, p, g)
    if verify:
        ref = build_slack(p, g)
        if ref.rows != out.rows or ref.entries != out.entries:
            raise InternalConsistencyError("closed-form junta slack disagrees with the generic slack")
    return out


def count_disjoint_ones(n: int, k: int) -> int:
    """Entries equal to 1 coming from disjoint (a, b); checked against binom(n,k) 2^(n-k)."""
    S = junta_slack(n, k, verify=False)
    count = 0
    for a, row in zip(S.rows, S.entries):
        for b, v in zip(S.cols, row):
            if v == 1 and not any(x and y for x, y in zip(a, b)):
                count += 1
    expected = comb(n, k) * 2 ** (n - k)
    if count != expected:
        raise InternalConsistencyError(f"disjoint ones {count} != {expected}")
    return count


def indep_clique_slack(n: int, rho=1, verify: bool = True) -> SlackMatrix:
    """Independent-set slack in the uniform model on clique instances K_U, C = 1/rho.

    With t = |S ∩ U| the entry is (1/rho - 1) + binom(t-1, 2): a constant shift of
    a matrix that is 1 on disjoint pairs and 0 when the intersection has size 1 or 2.
    """
    rho = Fraction(rho)
    if not 0 < rho <= 1:
        raise ValueError("0 < rho <= 1 required")
    check_scale(2 ** (2 * n), f"clique slack n={n}")
    verts = tuple(range(1, n + 1))
    cliques = [complete_graph(U) for m in range(1, n + 1) for U in combinations(verts, m)]
    p = build_indep_uniform(n).restrict(cliques, f"IndepUniform-cliques(n={n})")
    shift = 1 / rho - 1
    entries = []
    for K in cliques:
        U = set(K.vertices)
        row = []
        for S in p.solutions:
            t = len(U & set(S))
            row.append(shift + Fraction((t - 1) * (t - 2), 2))
        entries.append(row)
    C = {K: 1 / rho for K in cliques}
    g = Guarantees(C, {K: Fraction(1) for K in cliques})
    out = SlackMatrix(cliques, list(p.solutions), entries, p, g, {"shift": shift})
    if verify:
        ref = build_slack(p, g)
        if ref.rows != out.rows or ref.entries != out.entries:
            raise InternalConsistencyError("closed-form clique slack disagrees with the generic slack")
    return out
