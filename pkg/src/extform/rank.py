"""Certified intervals for the LP rank and the nonnegative rank of small matrices.

Lower bounds come from linear algebra and the combinatorics of the support;
upper bounds are explicit factorizations, each re-verified exactly. Floating
point is used only to seed candidate factorizations.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

import networkx as nx
import numpy as np
from scipy.optimize import nnls

from .factor import LPFactorization, verify_lp_factorization
from .lp import feasible_point, solve_standard
from .rational import (
    Matrix,
    affine_rank_of_columns,
    identity,
    is_nonnegative,
    rank,
    shape,
    to_matrix,
    transpose,
)
from .errors import NotNonnegativeError

ZERO = Fraction(0)


@dataclass
class Budget:
    """Search limits; the exhaustive stages only run inside ``max_entries`` / ``max_rank``."""

    max_entries: int = 25
    max_rank: int = 4
    max_subsets: int = 5000
    restarts: int = 12
    iterations: int = 400
    seed: int = 0
    cover_rows: int = 12

    @classmethod
    def from_env(cls) -> "Budget":
        """Read overrides such as ``EXTFORM_RANK_BUDGET="max_entries=36,max_rank=5"``."""
        b = cls()
        text = os.environ.get("EXTFORM_RANK_BUDGET", "")
        for part in filter(None, (p.strip() for p in text.split(","))):
            key, _, val = part.partition("=")
            if not hasattr(b, key):
                raise ValueError(f"unknown budget key {key!r}")
            v = int(val)
            if v <= 0 and key != "seed":
                raise ValueError("budgets must be positive")
            setattr(b, key, v)
        return b


@dataclass
class RankInterval:
    lower: int
    upper: int
    certificate_upper: LPFactorization
    certificate_lower: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return self.lower == self.upper


# ---------------------------------------------------------------- lower bounds


def support(M: Sequence[Sequence]) -> set[tuple[int, int]]:
    return {(i, j) for i, r in enumerate(M) for j, v in enumerate(r) if v != 0}


def maximal_rectangles(M: Sequence[Sequence]) -> list[tuple[frozenset, frozenset]]:
    """All maximal all-nonzero rectangles (closed row/column pairs)."""
    m, n = shape(M)
    rowsupp = [frozenset(j for j in range(n) if M[i][j] != 0) for i in range(m)]
    found = set()
    for size in range(1, m + 1):
        for R in combinations(range(m), size):
            C = frozenset.intersection(*(rowsupp[i] for i in R))
            if not C:
                continue
            closed = frozenset(i for i in range(m) if C <= rowsupp[i])
            found.add((closed, C))
    return sorted(found, key=lambda rc: (sorted(rc[0]), sorted(rc[1])))


def rectangle_cover_number(M: Sequence[Sequence]) -> tuple[int, list]:
    """Exact minimum number of nonzero rectangles covering the support (branch and bound)."""
    cells = support(M)
    if not cells:
        return 0, []
    rects = maximal_rectangles(M)
    covers = {c: [k for k, (R, C) in enumerate(rects) if c[0] in R and c[1] in C] for c in cells}
    best: list = [None]

    def rect_cells(k):
        R, C = rects[k]
        return {(i, j) for i in R for j in C}

    def search(uncovered: set, chosen: list):
        if best[0] is not None and len(chosen) >= len(best[0]):
            return
        if not uncovered:
            best[0] = list(chosen)
            return
        # a lower bound: cells pairwise not coverable together each need their own rectangle
        cell = min(uncovered, key=lambda c: (len(covers[c]), c))
        for k in covers[cell]:
            chosen.append(k)
            search(uncovered - rect_cells(k), chosen)
            chosen.pop()

    search(set(cells), [])
    cover = [(sorted(rects[k][0]), sorted(rects[k][1])) for k in best[0]]
    return len(best[0]), cover


def fooling_set(M: Sequence[Sequence]) -> list[tuple[int, int]]:
    """A maximum fooling set: support cells whose cross entries are never both nonzero."""
    cells = sorted(support(M))
    G = nx.Graph()
    G.add_nodes_from(cells)
    for a, b in combinations(cells, 2):
        (i, j), (k, l) = a, b
        if i != k and j != l and not (M[i][l] != 0 and M[k][j] != 0):
            G.add_edge(a, b)
    if not cells:
        return []
    clique, _ = nx.max_weight_clique(G, weight=None)
    return sorted(clique)


def _nonneg_lower(M: Matrix, budget: Budget) -> tuple[int, dict]:
    lo = rank(M) if M and M[0] else 0
    cert = {"linear_rank": lo}
    m, n = shape(M)
    if m and n:
        if min(m, n) <= budget.cover_rows:
            rows_major = M if m <= n else transpose(M)
            rc, cover = rectangle_cover_number(rows_major)
            cert["rectangle_cover"] = rc
            cert["rectangles"] = cover if m <= n else [(c, r) for r, c in cover]
            lo = max(lo, rc)
        if m * n <= 64:
            fs = fooling_set(M)
            cert["fooling_set"] = fs
            lo = max(lo, len(fs))
    return lo, cert


# ---------------------------------------------------------------- upper bounds


def _cone_coeffs(B: Matrix, target: Sequence) -> list[Fraction] | None:
    """Nonnegative x with B x = target, or None."""
    k = len(B[0]) if B and B[0] else 0
    if k == 0:
        return [] if all(v == 0 for v in target) else None
    res = solve_standard([0] * k, B, target)
    return res.x if res.status == "optimal" else None


def _trivial(M: Matrix) -> LPFactorization:
    m, n = shape(M)
    if m <= n:
        return LPFactorization(identity(m), [r[:] for r in M], [ZERO] * m, n_cols=n)
    return LPFactorization([r[:] for r in M], identity(n), [ZERO] * m, n_cols=n)


def _zero(M: Matrix) -> LPFactorization | None:
    m, n = shape(M)
    if all(v == 0 for r in M for v in r):
        return LPFactorization([[] for _ in range(m)], [], [ZERO] * m, n_cols=n)
    return None


def _rank_one(M: Matrix) -> LPFactorization | None:
    if rank(M) != 1:
        return None
    m, n = shape(M)
    i, j = next((i, j) for i in range(m) for j in range(n) if M[i][j] != 0)
    v = M[i][:]
    u = [M[k][j] / M[i][j] for k in range(m)]
    if any(x < 0 for x in u) or any(x < 0 for x in v):
        u, v = [-x for x in u], [-x for x in v]
    F = LPFactorization([[x] for x in u], [v], [ZERO] * m, n_cols=n)
    return F if verify_lp_factorization(M, F) else None


def _column_subset(M: Matrix, r: int, budget: Budget) -> LPFactorization | None:
    """Columns J with every column in cone(M[:, J]) give T = M[:, J]."""
    m, n = shape(M)
    cols = [[M[i][j] for i in range(m)] for j in range(n)]
    count = 0
    for J in combinations(range(n), r):
        count += 1
        if count > budget.max_subsets:
            return None
        B = [[M[i][j] for j in J] for i in range(m)]
        coeffs = []
        for c in cols:
            x = _cone_coeffs(B, c)
            if x is None:
                break
            coeffs.append(x)
        else:
            U = [[coeffs[j][k] for j in range(n)] for k in range(r)]
            return LPFactorization(B, U, [ZERO] * m, n_cols=n)
    return None


def _row_subset(M: Matrix, r: int, budget: Budget) -> LPFactorization | None:
    F = _column_subset(transpose(M), r, budget)
    if F is None:
        return None
    m = len(M)
    return LPFactorization(transpose(F.U), transpose(F.T), [ZERO] * m, n_cols=len(M[0]))


def _snap(x: float, max_den: int) -> Fraction:
    if x <= 1e-9:
        return ZERO
    return Fraction(x).limit_denominator(max_den)


def _bilinear(M: Matrix, r: int, budget: Budget) -> LPFactorization | None:
    """Float alternating nonnegative least squares, then an exact LP solve for one factor."""
    m, n = shape(M)
    A = np.array([[float(v) for v in row] for row in M])
    rng = np.random.default_rng(budget.seed + 7919 * r)
    for _ in range(budget.restarts):
        W = rng.random((m, r)) + 0.1
        H = rng.random((r, n)) + 0.1
        for _ in range(budget.iterations):
            H = np.column_stack([nnls(W, A[:, j])[0] for j in range(n)])
            W = np.vstack([nnls(H.T, A[i, :])[0] for i in range(m)])
        if np.abs(W @ H - A).max() > 1e-6 * max(1.0, np.abs(A).max()):
            continue
        for max_den in (1, 2, 4, 12, 60, 840):
            # normalize columns of W so snapped values are simple
            scale = W.max(axis=0)
            scale[scale == 0] = 1
            Wn = W / scale
            T = [[_snap(Wn[i, k], max_den) for k in range(r)] for i in range(m)]
            coeffs = []
            for j in range(n):
                x = _cone_coeffs(T, [M[i][j] for i in range(m)])
                if x is None:
                    break
                coeffs.append(x)
            else:
                U = [[coeffs[j][k] for j in range(n)] for k in range(r)]
                F = LPFactorization(T, U, [ZERO] * m, n_cols=n)
                if verify_lp_factorization(M, F):
                    return F
    return None


def _nonneg_upper(M: Matrix, target: int, budget: Budget) -> LPFactorization:
    """Smallest certified factorization found, stopping once ``target`` is reached."""
    F = _zero(M) or _rank_one(M)
    if F is not None:
        return F
    best = _trivial(M)
    m, n = shape(M)
    lo = max(target, 2)
    for r in range(lo, best.size):
        cand = _column_subset(M, r, budget) or _row_subset(M, r, budget)
        if cand is None and m * n <= budget.max_entries and r <= budget.max_rank:
            cand = _bilinear(M, r, budget)
        if cand is not None:
            return cand
    return best


def _with_shift(M: Matrix, mu: Sequence[Fraction]) -> Matrix:
    return [[v - mu[i] for v in row] for i, row in enumerate(M)]


def _attach_shift(F: LPFactorization, mu: Sequence[Fraction]) -> LPFactorization:
    return LPFactorization(F.T, F.U, list(mu), n_cols=F.n_cols)


def _absorb_shift(F: LPFactorization) -> LPFactorization:
    """[T | mu], [U ; 1]: a nonnegative factorization one larger."""
    n = F.n_cols
    T = [list(row) + [mu] for row, mu in zip(F.T, F.mu)]
    U = [list(r) for r in F.U] + [[Fraction(1)] * n]
    return LPFactorization(T, U, [ZERO] * len(F.mu), n_cols=n)


# ---------------------------------------------------------------- drivers


def _shift_drop(M: Matrix) -> list[Fraction] | None:
    """A shift 0 <= mu <= row minima with rank(M - mu 1^T) = rank(M) - 1, or None.

    Subtracting mu 1^T lowers the rank iff 1^T is in the row space of M and
    mu = M w with sum(w) = 1, so existence is one exact feasibility LP.
    None therefore proves rank_LP(M) >= rank(M).
    """
    m, n = shape(M)
    r = rank(M)
    if r == 0 or rank(M + [[Fraction(1)] * n]) > r:
        return None
    A, b = [[Fraction(1)] * n, [Fraction(-1)] * n], [Fraction(1), Fraction(-1)]
    for i in range(m):
        A.append([-v for v in M[i]])
        b.append(ZERO)
        for j in range(n):
            A.append(M[i][:])
            b.append(M[i][j])
    w = feasible_point(A, b, n)
    if w is None:
        return None
    mu = [sum((v * x for v, x in zip(row, w)), ZERO) for row in M]
    if rank(_with_shift(M, mu)) != r - 1:
        raise AssertionError("shift did not lower the rank")
    return mu


def _bounds(M: Matrix, budget: Budget):
    m, n = shape(M)
    nn_lo, nn_cert = _nonneg_lower(M, budget)

    # rows containing a zero force mu = 0 there
    zero_rows = [i for i in range(m) if any(v == 0 for v in M[i])]
    lp_lo = max(affine_rank_of_columns(M), nn_lo - 1)
    lp_cert = {"affine_rank": affine_rank_of_columns(M), "nonneg_lower_minus_one": nn_lo - 1}
    drop = _shift_drop(M)
    r = rank(M)
    lp_cert["rank_drop_shift"] = drop
    lp_lo = max(lp_lo, r - 1 if drop is not None else r)
    if zero_rows:
        sub = [M[i] for i in zero_rows]
        zlo, zcert = _nonneg_lower(sub, budget)
        lp_cert["zero_rows"] = zero_rows
        lp_cert["zero_row_bounds"] = zcert
        lp_lo = max(lp_lo, zlo)

    nn_F = _nonneg_upper(M, nn_lo, budget)

    mins = [min(row) for row in M]
    candidates = []
    free = [i for i in range(m) if mins[i] > 0]
    if len(free) <= 5:
        for pick in product((0, 1), repeat=len(free)):
            mu = [ZERO] * m
            for i, p in zip(free, pick):
                if p:
                    mu[i] = mins[i]
            candidates.append(mu)
    else:
        candidates = [[ZERO] * m, list(mins)]
    candidates.sort(key=lambda mu: -sum(1 for v in mu if v))
    if drop is not None:
        candidates.insert(0, drop)
    lp_F = nn_F
    for mu in candidates:
        if lp_F.size <= lp_lo:
            break
        shifted = _with_shift(M, mu)
        F = _nonneg_upper(shifted, lp_lo, budget)
        if F.size < lp_F.size:
            lp_F = _attach_shift(F, mu)

    # cross propagation between the two ranks
    if lp_F.size + 1 < nn_F.size:
        nn_F = _absorb_shift(lp_F)
    if nn_F.size < lp_F.size:
        lp_F = nn_F
    nn_lo = max(nn_lo, lp_lo)
    lp_lo = max(lp_lo, nn_lo - 1)
    for F in (nn_F, lp_F):
        if not verify_lp_factorization(M, F):
            raise AssertionError("rank certificate failed verification")
    return (lp_lo, lp_F, lp_cert), (nn_lo, nn_F, nn_cert)


def _prepare(M) -> Matrix:
    E = to_matrix(M.entries if hasattr(M, "entries") else M)
    if not is_nonnegative(E):
        raise NotNonnegativeError("rank bounds need a nonnegative matrix")
    return E


def lp_rank_bounds(M, budget: Budget | None = None) -> RankInterval:
    """Certified interval for min r with M = T U + mu 1^T, all factors nonnegative."""
    E = _prepare(M)
    (lo, F, cert), _ = _bounds(E, budget or Budget.from_env())
    return RankInterval(lo, F.size, F, cert)


def nonneg_rank_bounds(M, budget: Budget | None = None) -> RankInterval:
    E = _prepare(M)
    _, (lo, F, cert) = _bounds(E, budget or Budget.from_env())
    return RankInterval(lo, F.size, F, cert)


def rank_sandwich(M, budget: Budget | None = None) -> tuple[RankInterval, RankInterval]:
    E = _prepare(M)
    (a, F, c1), (b, G, c2) = _bounds(E, budget or Budget.from_env())
    return RankInterval(a, F.size, F, c1), RankInterval(b, G.size, G, c2)
