"""LP/SDP factorizations of slack matrices and their link to LP formulations."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Sequence

from .core import Guarantees, ProblemSpec, sound_instances
from .errors import (
    EmptyPolyhedronError,
    FactorizationInvalidError,
    FormulationInvalidError,
    NotNonnegativeError,
    NotPsdError,
    ShapeError,
)
from .lp import minimize_ineq, solve_standard
from .psd import diag, is_psd, is_symmetric, trace_product
from .rational import Matrix, fmt_rational, matmul, parse_rational, shape, to_matrix

ZERO = Fraction(0)


def _entries(M) -> Matrix:
    return M.entries if hasattr(M, "entries") else to_matrix(M)


# ---------------------------------------------------------------- factorizations


@dataclass
class LPFactorization:
    """M = T U + mu 1^T with T (m x r), U (r x n) and mu all nonnegative."""

    T: Matrix
    U: Matrix
    mu: list[Fraction]
    n_cols: int | None = None

    def __post_init__(self):
        self.T = to_matrix(self.T) if self.T else [[] for _ in self.mu]
        self.U = to_matrix(self.U) if self.U else []
        self.mu = [Fraction(v) for v in self.mu]
        if self.n_cols is None:
            self.n_cols = len(self.U[0]) if self.U else None

    @property
    def size(self) -> int:
        return len(self.U) if self.U else (len(self.T[0]) if self.T and self.T[0] else 0)

    def product(self, n: int | None = None) -> Matrix:
        n = self.n_cols if n is None else n
        if n is None:
            raise ShapeError("column count unknown for a size-0 factorization")
        r = self.size
        P = matmul(self.T, self.U, inner=r) if r else [[ZERO] * n for _ in self.mu]
        return [[P[i][j] + self.mu[i] for j in range(n)] for i in range(len(self.mu))]

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for r in self.T for v in r) and all(v >= 0 for r in self.U for v in r) \
            and all(v >= 0 for v in self.mu)

    def to_json(self) -> str:
        return json.dumps({
            "kind": "lp",
            "T": [[fmt_rational(v) for v in r] for r in self.T],
            "U": [[fmt_rational(v) for v in r] for r in self.U],
            "mu": [fmt_rational(v) for v in self.mu],
            "n_cols": self.n_cols,
        }, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "LPFactorization":
        d = json.loads(text)
        q = lambda rows: [[parse_rational(v) for v in r] for r in rows]  # noqa: E731
        return cls(q(d["T"]), q(d["U"]), [parse_rational(v) for v in d["mu"]], d.get("n_cols"))


def verify_lp_factorization(M, F: LPFactorization) -> bool:
    E = _entries(M)
    m, n = shape(E)
    r = F.size
    if len(F.mu) != m or len(F.T) != m or any(len(row) != r for row in F.T) \
            or len(F.U) != r or any(len(row) != n for row in F.U):
        raise ShapeError(f"factorization shape does not fit a {m}x{n} matrix")
    if not F.is_nonnegative():
        return False
    return F.product(n) == E


@dataclass
class SDPFactorization:
    """M_ij = tr(T_i U_j) + mu_i with every T_i and U_j positive semidefinite."""

    Ts: list[Matrix]
    Us: list[Matrix]
    mu: list[Fraction]

    def __post_init__(self):
        self.Ts = [to_matrix(t) for t in self.Ts]
        self.Us = [to_matrix(u) for u in self.Us]
        self.mu = [Fraction(v) for v in self.mu]

    @property
    def size(self) -> int:
        for X in self.Ts + self.Us:
            return len(X)
        return 0

    def product(self) -> Matrix:
        return [[trace_product(Ti, Uj) + mi for Uj in self.Us] for Ti, mi in zip(self.Ts, self.mu)]


def verify_sdp_factorization(M, F: SDPFactorization) -> bool:
    """True iff the factorization reproduces M; a non-PSD factor raises NotPsdError."""
    E = _entries(M)
    m, n = shape(E)
    r = F.size
    if len(F.Ts) != m or len(F.Us) != n or len(F.mu) != m:
        raise ShapeError(f"factor lists do not fit a {m}x{n} matrix")
    for name, mats in (("T", F.Ts), ("U", F.Us)):
        for i, X in enumerate(mats):
            if len(X) != r or any(len(row) != r for row in X):
                raise ShapeError(f"{name}[{i}] is not {r}x{r}")
            if not is_symmetric(X) or not is_psd(X):
                raise NotPsdError(f"{name}[{i}] is not positive semidefinite", which=(name, i))
    if any(v < 0 for v in F.mu):
        return False
    return F.product() == E


def sdp_from_lp(F: LPFactorization) -> SDPFactorization:
    """Diagonal embedding: T_i = diag(T row i), U_j = diag(U column j)."""
    r = F.size
    n = F.n_cols or 0
    Ts = [diag(row) for row in F.T]
    Us = [diag([F.U[k][j] for k in range(r)]) for j in range(n)]
    return SDPFactorization(Ts, Us, F.mu)


def solution_partition(F: LPFactorization) -> tuple[list[int], list[int]]:
    """Split columns of U into coordinatewise-minimal ones and the rest.

    A column equal to an earlier column counts as dominated.
    """
    n = F.n_cols or 0
    cols = [tuple(F.U[k][j] for k in range(F.size)) for j in range(n)]

    def dominated(j):
        u = cols[j]
        for i, v in enumerate(cols):
            if i == j or not all(a <= b for a, b in zip(v, u)):
                continue
            if v != u or i < j:
                return True
        return False

    S_o = [j for j in range(n) if not dominated(j)]
    S_n = [j for j in range(n) if j not in set(S_o)]
    return S_o, S_n


# ---------------------------------------------------------------- Farkas


def farkas_certificate(A: Sequence[Sequence], b: Sequence, phi: tuple[Sequence, Any]):
    """Write phi(x) = g.x + phi0 as lambda0 + sum_j lambda_j (b_j - A_j x) on {A x <= b}.

    Returns ``(lambda0, lambdas)``, both nonnegative, checked coefficientwise.
    """
    g = [Fraction(v) for v in phi[0]]
    phi0 = Fraction(phi[1])
    d = len(g)
    A = [[Fraction(v) for v in r] for r in A]
    b = [Fraction(v) for v in b]
    if any(len(r) != d for r in A) or len(A) != len(b):
        raise ShapeError("inconsistent system dimensions")
    q = len(A)
    res = minimize_ineq(g, A, b)
    if res.status == "infeasible":
        raise EmptyPolyhedronError("{x : A x <= b} is empty")
    if res.status == "unbounded":
        slope = sum((gi * ri for gi, ri in zip(g, res.ray)), ZERO)
        base = sum((gi * xi for gi, xi in zip(g, res.x)), phi0)
        t = (abs(base) + 1) / -slope
        w = [xi + t * ri for xi, ri in zip(res.x, res.ray)]
        raise NotNonnegativeError("affine function is unbounded below on the polyhedron", witness=w)
    if res.value + phi0 < 0:
        raise NotNonnegativeError(f"minimum {res.value + phi0} < 0", witness=res.x)

    # dual: lambda >= 0, A^T lambda = -g, minimize b.lambda
    At = [[A[j][i] for j in range(q)] for i in range(d)]
    dual = solve_standard(b, At, [-v for v in g])
    if dual.status != "optimal":
        raise EmptyPolyhedronError(f"dual LP {dual.status}; primal and dual disagree")
    lambdas = dual.x
    lambda0 = phi0 - sum((bj * lj for bj, lj in zip(b, lambdas)), ZERO)
    lin = [sum((-A[j][i] * lambdas[j] for j in range(q)), ZERO) for i in range(d)]
    if lin != g or lambda0 < 0 or any(v < 0 for v in lambdas):
        raise FactorizationInvalidError("Farkas multipliers failed the coefficient check")
    return lambda0, lambdas


# ---------------------------------------------------------------- formulations


@dataclass
class LPFormulation:
    """System A x <= b with points x^s and affine objectives w^f = (linear, constant)."""

    A: Matrix
    b: list[Fraction]
    points: Mapping[Any, list[Fraction]]
    funcs: Mapping[Any, tuple[list[Fraction], Fraction]]
    dim: int = field(default=-1)

    def __post_init__(self):
        self.A = to_matrix(self.A) if self.A else []
        self.b = [Fraction(v) for v in self.b]
        self.points = {s: [Fraction(v) for v in x] for s, x in self.points.items()}
        self.funcs = {f: ([Fraction(v) for v in w], Fraction(c)) for f, (w, c) in self.funcs.items()}
        if self.dim < 0:
            self.dim = len(next(iter(self.points.values()))) if self.points else 0

    @property
    def size(self) -> int:
        return len(self.A)

    def evaluate(self, f, x) -> Fraction:
        w, c = self.funcs[f]
        return sum((wi * xi for wi, xi in zip(w, x)), c)


def verify_formulation(p: ProblemSpec, g: Guarantees, L: LPFormulation) -> list:
    """Check containment, linearity and the approximation bound; returns the sound rows.

    Raises FormulationInvalidError with ``condition`` in {"contain", "linear", "approx"}.
    """
    rows = sound_instances(p, g)
    for s in p.solutions:
        x = L.points.get(s)
        if x is None or len(x) != L.dim:
            raise FormulationInvalidError(f"missing or malformed point for {s!r}", "contain")
        for j, (Aj, bj) in enumerate(zip(L.A, L.b)):
            if sum((a * v for a, v in zip(Aj, x)), ZERO) > bj:
                raise FormulationInvalidError(f"point of {s!r} violates inequality {j}", "contain")
    for f in rows:
        if f not in L.funcs:
            raise FormulationInvalidError(f"no affine function for {f!r}", "linear")
        for s, v in zip(p.solutions, p.value_row(f)):
            if L.evaluate(f, L.points[s]) != v:
                raise FormulationInvalidError(f"w^f(x^s) != val_f(s) at {f!r}, {s!r}", "linear")
    for f in rows:
        w, c = L.funcs[f]
        if p.sense.is_max:
            res = minimize_ineq([-v for v in w], L.A, L.b)
            bad = res.status == "unbounded" or (res.status == "optimal" and c - res.value > g.C[f])
        else:
            res = minimize_ineq(w, L.A, L.b)
            bad = res.status == "unbounded" or (res.status == "optimal" and c + res.value < g.C[f])
        if res.status == "infeasible":
            raise FormulationInvalidError("inequality system is empty", "contain")
        if bad:
            raise FormulationInvalidError(f"LP optimum of w^f beats C(f) at {f!r}", "approx")
    return rows


def factorization_from_formulation(p: ProblemSpec, g: Guarantees, L: LPFormulation) -> LPFactorization:
    """T(f, j) from Farkas multipliers of C(f) - w^f, U(j, s) = b_j - A_j x^s."""
    rows = verify_formulation(p, g, L)
    U = [[bj - sum((a * v for a, v in zip(Aj, L.points[s])), ZERO) for s in p.solutions]
         for Aj, bj in zip(L.A, L.b)]
    T, mu = [], []
    for f in rows:
        w, c = L.funcs[f]
        C = Fraction(g.C[f])
        phi = ([-v for v in w], C - c) if p.sense.is_max else (list(w), c - C)
        lam0, lam = farkas_certificate(L.A, L.b, phi)
        T.append(lam)
        mu.append(lam0)
    F = LPFactorization(T, U, mu, n_cols=len(p.solutions))
    from .slack import build_slack
    if not verify_lp_factorization(build_slack(p, g), F):
        raise FactorizationInvalidError("extracted factorization does not reproduce the slack matrix")
    return F


def formulation_from_factorization(p: ProblemSpec, g: Guarantees, F: LPFactorization) -> LPFormulation:
    """System x >= 0 in R^r, x^s = U_s, w^f = C(f) -/+ (mu(f) + T_f x)."""
    from .slack import build_slack
    S = build_slack(p, g)
    if not verify_lp_factorization(S, F):
        raise FactorizationInvalidError("factorization does not reproduce the slack matrix")
    r = F.size
    A = [[Fraction(-1) if i == j else ZERO for j in range(r)] for i in range(r)]
    b = [ZERO] * r
    points = {s: [F.U[k][j] for k in range(r)] for j, s in enumerate(p.solutions)}
    sign = -1 if p.sense.is_max else 1
    funcs = {
        f: ([sign * t for t in F.T[i]], Fraction(g.C[f]) + sign * F.mu[i])
        for i, f in enumerate(S.rows)
    }
    L = LPFormulation(A, b, points, funcs, dim=r)
    verify_formulation(p, g, L)
    return L


def maxcut_formulation(p: ProblemSpec) -> LPFormulation:
    """Exact cut-polytope description for MaxCUT on 2 or 3 vertices.

    Coordinates are edge indicators; n=3 uses the four triangle facets.
    """
    n = p.meta.get("n")
    if p.meta.get("problem") != "maxcut" or n not in (2, 3):
        raise ValueError("hand-built cut polytope available for MaxCUT n in {2, 3}")
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if n == 2:
        A, b = [[-1], [1]], [0, 1]
    else:
        A = [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]]
        b = [2, 0, 0, 0]
    points = {s: [int(s[i - 1] != s[j - 1]) for i, j in pairs] for s in p.solutions}
    funcs = {G: ([int(e in G.edges) for e in pairs], 0) for G in p.instances}
    return LPFormulation(A, b, points, funcs, dim=len(pairs))
