"""Coefficient-bounded rank factorizations and rounding of perturbed slack matrices."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .core import Guarantees, ProblemSpec
from .errors import FactorizationInvalidError, InternalConsistencyError, NotNonnegativeError, ShapeError
from .factor import LPFactorization, SDPFactorization, verify_lp_factorization, verify_sdp_factorization
from .rational import Matrix, det, inverse, matmul, max_abs, rank, rref, shape, submatrix, to_matrix, transpose
from .slack import build_slack

ZERO = Fraction(0)
EXHAUSTIVE_ROWS = 12


@dataclass
class BoundedRankFactorization:
    """M = sum_i a_i b_i with |a_i| <= 1 and |b_i| <= |M| entrywise maxima."""

    terms: list[tuple[list[Fraction], list[Fraction]]]
    target_norm: Fraction
    rows: list[int] = field(default_factory=list)
    cols: list[int] = field(default_factory=list)

    def product(self, m: int, n: int) -> Matrix:
        out = [[ZERO] * n for _ in range(m)]
        for a, b in self.terms:
            for i in range(m):
                if a[i]:
                    for j in range(n):
                        out[i][j] += a[i] * b[j]
        return out


def _abs_det(M, rows, cols) -> Fraction:
    return abs(det(submatrix(M, rows, cols)))


def max_volume_rows(M: Sequence[Sequence], cols: Sequence[int]) -> list[int]:
    """Rows I maximizing |det M[I, cols]|.

    Exhaustive (first maximizer in lexicographic order) up to EXHAUSTIVE_ROWS rows;
    beyond that, start from independent rows and apply improving single swaps
    until none is left, which already bounds every coefficient by 1.
    """
    m = len(M)
    r = len(cols)
    if m <= EXHAUSTIVE_ROWS:
        best, best_rows = Fraction(-1), None
        for rows in combinations(range(m), r):
            v = _abs_det(M, rows, cols)
            if v > best:
                best, best_rows = v, list(rows)
        return best_rows
    rows = rref(transpose(submatrix(M, range(m), cols)))[1]
    cur = _abs_det(M, rows, cols)
    improved = True
    while improved:
        improved = False
        for p in range(r):
            for k in range(m):
                if k in rows:
                    continue
                trial = rows[:p] + [k] + rows[p + 1:]
                v = _abs_det(M, trial, cols)
                if v > cur:
                    rows, cur, improved = trial, v, True
    return sorted(rows)


def bounded_factorization(M: Sequence[Sequence]) -> BoundedRankFactorization:
    """Write M through a max-volume row basis: M = A M[I, :], with |A| <= 1."""
    M = to_matrix(M)
    m, n = shape(M)
    norm = max_abs(M)
    if norm == 0:
        return BoundedRankFactorization([], norm)
    cols = rref(M)[1]
    rows = max_volume_rows(M, cols)
    inv = inverse(submatrix(M, rows, cols))
    A = matmul(submatrix(M, range(m), cols), inv)
    terms = [([A[i][t] for i in range(m)], M[rows[t]][:]) for t in range(len(rows))]
    F = BoundedRankFactorization(terms, norm, rows, cols)
    if F.product(m, n) != M:
        raise InternalConsistencyError("bounded factorization does not reproduce M")
    for a, b in terms:
        if max(abs(v) for v in a) > 1 or max(abs(v) for v in b) > norm:
            raise InternalConsistencyError("coefficient bound violated")
    return F


def split_sign(a: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    pos = [v if v > 0 else ZERO for v in a]
    neg = [-v if v < 0 else ZERO for v in a]
    return pos, neg


@dataclass
class RoundingResult:
    N: Matrix
    Cprime: dict
    fstar: dict
    k: int
    delta: Fraction
    rank_M: int
    rank_Mtilde: int
    factorization: BoundedRankFactorization
    size_bound: int | None = None
    certificate: LPFactorization | None = None
    shifted_certificate: LPFactorization | None = None
    sdp_certificate: SDPFactorization | None = None
    shifted_matrix: Matrix | None = None
    checks: dict = field(default_factory=dict)


def _block_diag(A: Matrix, d: Sequence[Fraction]) -> Matrix:
    r, k = len(A), len(d)
    out = [list(row) + [ZERO] * k for row in A]
    for i in range(k):
        out.append([ZERO] * (r + i) + [Fraction(d[i])] + [ZERO] * (k - i - 1))
    return out


def round_to_problem(p: ProblemSpec, g: Guarantees, Mtilde: Sequence[Sequence],
                     Ftilde: LPFactorization | None = None,
                     Stilde: SDPFactorization | None = None) -> RoundingResult:
    """Turn a nonnegative perturbation of the slack matrix into a certified slack bound.

    With D = Mtilde - M = sum a_i b_i and b = |D|_max 1:
    N = M + sum |a_i| b = Mtilde + sum a+ (b - b_i) + sum a- (b + b_i).
    """
    S = build_slack(p, g)
    M = S.entries
    Mt = to_matrix(Mtilde)
    m, n = shape(M)
    if shape(Mt) != (m, n):
        raise ShapeError(f"Mtilde is {shape(Mt)}, slack matrix is {(m, n)}")
    bad = next(((i, j) for i in range(m) for j in range(n) if Mt[i][j] < 0), None)
    if bad is not None:
        raise NotNonnegativeError("Mtilde has a negative entry", witness=bad)
    D = [[Mt[i][j] - M[i][j] for j in range(n)] for i in range(m)]
    BF = bounded_factorization(D)
    delta = max_abs(D)
    k = len(BF.terms)
    rM, rMt = rank(M), rank(Mt)
    if k > rM + rMt:
        raise InternalConsistencyError("more terms than rank M + rank Mtilde")

    abs_sum = [sum((abs(a[i]) for a, _ in BF.terms), ZERO) for i in range(m)]
    N1 = [[M[i][j] + delta * abs_sum[i] for j in range(n)] for i in range(m)]
    N2 = [row[:] for row in Mt]
    pos_neg = []
    for a, b in BF.terms:
        ap, an = split_sign(a)
        if any(x * y for x, y in zip(ap, an)) or [x - y for x, y in zip(ap, an)] != a:
            raise InternalConsistencyError("sign split failed")
        bm = [delta - v for v in b]
        bp = [delta + v for v in b]
        if any(v < 0 for v in bm + bp):
            raise InternalConsistencyError("b - b_i or b + b_i has a negative entry")
        pos_neg.append((ap, an, bm, bp))
        for i in range(m):
            for j in range(n):
                N2[i][j] += ap[i] * bm[j] + an[i] * bp[j]
    if N1 != N2:
        raise InternalConsistencyError("the two expressions for N disagree")
    if any(v < 0 for row in N1 for v in row):
        raise InternalConsistencyError("N has a negative entry")

    sign = 1 if p.sense.is_max else -1
    fstar, Cprime, lift = {}, {}, []
    for i, f in enumerate(S.rows):
        C = Fraction(g.C[f])
        fstar[f] = C + sign * delta * abs_sum[i]
        Cprime[f] = C + sign * (rM + rMt) * delta
        gap = (Cprime[f] - fstar[f]) * sign
        if gap < 0:
            raise InternalConsistencyError("f* exceeds C'")
        lift.append(gap)
    shifted = [[N1[i][j] + lift[i] for j in range(n)] for i in range(m)]

    res = RoundingResult(N1, Cprime, fstar, k, delta, rM, rMt, BF, shifted_matrix=shifted)
    if Ftilde is not None:
        if not verify_lp_factorization(Mt, Ftilde):
            raise FactorizationInvalidError("Ftilde does not factor Mtilde")
        T = [list(Ftilde.T[i]) + [pn[0][i] for pn in pos_neg] + [pn[1][i] for pn in pos_neg] for i in range(m)]
        U = [list(r) for r in Ftilde.U] + [pn[2] for pn in pos_neg] + [pn[3] for pn in pos_neg]
        FN = LPFactorization(T, U, Ftilde.mu, n_cols=n)
        if not verify_lp_factorization(N1, FN):
            raise InternalConsistencyError("assembled factorization does not reproduce N")
        FS = LPFactorization(T, U, [mu + d for mu, d in zip(Ftilde.mu, lift)], n_cols=n)
        if not verify_lp_factorization(shifted, FS):
            raise InternalConsistencyError("shifted factorization does not reproduce the (C', S) slack")
        res.certificate, res.shifted_certificate = FN, FS
        res.size_bound = Ftilde.size + 2 * (rM + rMt)
        if FN.size > res.size_bound:
            raise InternalConsistencyError("factorization of N exceeds the size bound")
    if Stilde is not None:
        if not verify_sdp_factorization(Mt, Stilde):
            raise FactorizationInvalidError("Stilde does not factor Mtilde")
        Ts = [_block_diag(Stilde.Ts[i], [pn[0][i] for pn in pos_neg] + [pn[1][i] for pn in pos_neg])
              for i in range(m)]
        Us = [_block_diag(Stilde.Us[j], [pn[2][j] for pn in pos_neg] + [pn[3][j] for pn in pos_neg])
              for j in range(n)]
        SN = SDPFactorization(Ts, Us, Stilde.mu)
        if not verify_sdp_factorization(N1, SN):
            raise InternalConsistencyError("block SDP factorization does not reproduce N")
        res.sdp_certificate = SN
    res.checks = {"two_forms_agree": True, "N_nonnegative": True, "fstar_le_Cprime": True}
    return res
