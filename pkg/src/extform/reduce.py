"""Affine reductions between problems and their action on slack matrices.

A reduction maps each source instance to a nonnegative combination of target
instances plus a shift, and each source solution to a convex combination of
target solutions. Same-sense reductions use

    val1 = sum b a val2 + shift,    C1 >= sum b C2 + shift   (max source)

and opposite-sense ones use ``shift - sum b a val2`` instead; for a
minimization source the guarantee inequality flips.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Mapping, Sequence

from .core import Guarantees, ProblemSpec, Sense, brute_force_optimum, sound_instances
from .errors import (
    FactorizationInvalidError,
    IdentifierError,
    InternalConsistencyError,
    ReductionError,
    ShapeError,
    SimpleReductionInvalidError,
)
from .factor import LPFactorization, SDPFactorization, verify_lp_factorization, verify_sdp_factorization
from .io import label
from .rational import Matrix, fmt_rational, parse_rational

ZERO = Fraction(0)


@dataclass
class Reduction:
    """Sparse beta (f1 -> ([(f2, b)], shift)) and gamma (s1 -> [(s2, a)])."""

    beta: dict
    gamma: dict
    sense_pair: tuple[Sense, Sense]
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.beta = {
            f1: ([(f2, Fraction(b)) for f2, b in terms], Fraction(shift))
            for f1, (terms, shift) in self.beta.items()
        }
        self.gamma = {s1: [(s2, Fraction(a)) for s2, a in terms] for s1, terms in self.gamma.items()}
        for f1, (terms, _) in self.beta.items():
            if any(b < 0 for _, b in terms):
                raise ReductionError(f"negative beta coefficient at {label(f1)}")
        for s1, terms in self.gamma.items():
            if any(a < 0 for _, a in terms):
                raise ReductionError(f"negative gamma coefficient at {label(s1)}")
            if sum((a for _, a in terms), ZERO) != 1:
                raise ReductionError(f"gamma({label(s1)}) is not a convex combination")

    @property
    def same_sense(self) -> bool:
        return self.sense_pair[0] is self.sense_pair[1]

    def combine(self, inner: Fraction, shift: Fraction) -> Fraction:
        """Apply the sense-dependent affine form to a weighted target sum."""
        return inner + shift if self.same_sense else shift - inner

    @classmethod
    def create(cls, P1: ProblemSpec, P2: ProblemSpec, beta: Mapping, gamma: Mapping,
               G1: Guarantees | None = None, G2: Guarantees | None = None, meta=None) -> "Reduction":
        """Validated constructor: ids must exist and beta must land in sound target instances."""
        red = cls(dict(beta), dict(gamma), (P1.sense, P2.sense), dict(meta or {}))
        for f1, (terms, _) in red.beta.items():
            P1.inst_idx(f1)
            for f2, _ in terms:
                P2.inst_idx(f2)
        for s1, terms in red.gamma.items():
            P1.sol_idx(s1)
            for s2, _ in terms:
                P2.sol_idx(s2)
        missing = [s for s in P1.solutions if s not in red.gamma]
        if missing:
            raise ReductionError(f"gamma undefined at {label(missing[0])}")
        if G2 is not None:
            sound2 = set(sound_instances(P2, G2))
            rows1 = sound_instances(P1, G1) if G1 is not None else list(red.beta)
            for f1 in rows1:
                if f1 not in red.beta:
                    raise ReductionError(f"beta undefined at {label(f1)}")
                for f2, _ in red.beta[f1][0]:
                    if f2 not in sound2:
                        raise ReductionError(
                            f"beta({label(f1)}) uses {label(f2)}, which is not a sound target instance")
        return red

    # -- serialization by position in the two problems
    def to_json(self, P1: ProblemSpec, P2: ProblemSpec) -> str:
        doc = {
            "senses": [self.sense_pair[0].value, self.sense_pair[1].value],
            "beta": [
                {"f1": P1.inst_idx(f1), "label": label(f1), "shift": fmt_rational(shift),
                 "terms": [[P2.inst_idx(f2), fmt_rational(b)] for f2, b in terms]}
                for f1, (terms, shift) in self.beta.items()
            ],
            "gamma": [
                {"s1": P1.sol_idx(s1), "label": label(s1),
                 "terms": [[P2.sol_idx(s2), fmt_rational(a)] for s2, a in terms]}
                for s1, terms in self.gamma.items()
            ],
        }
        return json.dumps(doc, indent=1, sort_keys=True)

    @classmethod
    def from_json(cls, text: str, P1: ProblemSpec, P2: ProblemSpec) -> "Reduction":
        doc = json.loads(text)

        def at(seq, i):
            if not isinstance(i, int) or not 0 <= i < len(seq):
                raise IdentifierError(f"index {i!r} out of range")
            return seq[i]

        beta = {
            at(P1.instances, e["f1"]): (
                [(at(P2.instances, j), parse_rational(b)) for j, b in e["terms"]],
                parse_rational(e["shift"]),
            )
            for e in doc["beta"]
        }
        gamma = {
            at(P1.solutions, e["s1"]): [(at(P2.solutions, j), parse_rational(a)) for j, a in e["terms"]]
            for e in doc["gamma"]
        }
        senses = tuple(Sense(v) for v in doc.get("senses", [P1.sense.value, P2.sense.value]))
        if senses != (P1.sense, P2.sense):
            raise ReductionError("serialized senses do not match the problems")
        return cls(beta, gamma, senses)


@dataclass
class ReductionReport:
    ok: bool
    pairs_checked: int
    instances_checked: int
    violations: list

    def first(self):
        return self.violations[0] if self.violations else None

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "pairs_checked": self.pairs_checked,
            "instances_checked": self.instances_checked,
            "violations": self.violations,
        }


def _gamma_values(red: Reduction, P2: ProblemSpec, f2, s1_list) -> list[Fraction]:
    row = P2.value_row(f2)
    out = []
    for s1 in s1_list:
        out.append(sum((a * row[P2.sol_idx(s2)] for s2, a in red.gamma[s1]), ZERO))
    return out


def verify_reduction(P1: ProblemSpec, G1: Guarantees, P2: ProblemSpec, G2: Guarantees,
                     red: Reduction, instances: str = "sound", limit: int = 50) -> ReductionReport:
    """Check the exact value identity and the guarantee inequality.

    ``instances="sound"`` checks the sound source instances, ``"all"`` every one.
    At most ``limit`` violations are recorded.
    """
    if red.sense_pair != (P1.sense, P2.sense):
        raise ShapeError("reduction senses do not match the problems")
    if instances not in ("sound", "all"):
        raise ValueError("instances must be 'sound' or 'all'")
    rows = sound_instances(P1, G1) if instances == "sound" else list(P1.instances)
    violations: list = []
    pairs = 0
    cache: dict = {}
    for f1 in rows:
        if f1 not in red.beta:
            raise ShapeError(f"beta undefined at {label(f1)}")
        terms, shift = red.beta[f1]
        inner = [ZERO] * len(P1.solutions)
        for f2, b in terms:
            if f2 not in cache:
                cache[f2] = _gamma_values(red, P2, f2, P1.solutions)
            vals = cache[f2]
            for j in range(len(inner)):
                inner[j] += b * vals[j]
        row1 = P1.value_row(f1)
        for j, s1 in enumerate(P1.solutions):
            pairs += 1
            expected = red.combine(inner[j], shift)
            if expected != row1[j] and len(violations) < limit:
                violations.append({
                    "kind": "value", "f1": label(f1), "s1": label(s1),
                    "residual": fmt_rational(row1[j] - expected),
                })
        c2 = sum((b * Fraction(G2.C[f2]) for f2, b in terms), ZERO)
        bound = red.combine(c2, shift)
        c1 = Fraction(G1.C[f1])
        bad = c1 < bound if P1.sense.is_max else c1 > bound
        if bad and len(violations) < limit:
            violations.append({
                "kind": "guarantee", "f1": label(f1), "s1": None,
                "residual": fmt_rational(c1 - bound),
            })
    return ReductionReport(not violations, pairs, len(rows), violations)


def identity_reduction(P: ProblemSpec) -> Reduction:
    return Reduction(
        {f: ([(f, 1)], 0) for f in P.instances},
        {s: [(s, 1)] for s in P.solutions},
        (P.sense, P.sense),
    )


# ---------------------------------------------------------------- simple reductions


@dataclass
class SimpleData:
    alpha: Fraction
    mu: Fraction
    kappa: Fraction
    exact: bool
    size_factor_bound: Fraction


def fit_affine(points: Sequence[tuple[Fraction, Fraction, Fraction]]) -> tuple[Fraction, Fraction] | None:
    """Fit v2 = alpha v1 + mu size exactly from (v1, size, v2) samples, or None."""
    from .rational import rref

    rows = [[Fraction(v1), Fraction(sz), Fraction(v2)] for v1, sz, v2 in points]
    R, piv = rref(rows)
    if 2 in piv:
        return None
    sol = {0: ZERO, 1: ZERO}
    for i, p in enumerate(piv):
        sol[p] = R[i][2]
    alpha, mu = sol[0], sol[1]
    if any(alpha * v1 + mu * sz != v2 for v1, sz, v2 in rows):
        return None
    return alpha, mu


def simple_reduction(beta_fn: Callable, gamma_fn: Callable, alpha, mu,
                     P1: ProblemSpec, P2: ProblemSpec, check_exact: bool = True) -> Reduction:
    """Wrap point maps with val_{beta(f1)}(gamma(s1)) = alpha val_{f1}(s1) + mu |f1|.

    The size ratio kappa = |beta(f1)| / |f1| is measured and must be constant.
    Target guarantees are then C2 = (alpha tau1 + mu) / kappa per unit size.
    """
    alpha, mu = Fraction(alpha), Fraction(mu)
    if alpha == 0:
        raise SimpleReductionInvalidError("alpha must be nonzero")
    if (alpha > 0) != (P1.sense is P2.sense):
        raise SimpleReductionInvalidError("sign of alpha does not match the pair of senses")
    images = {s1: gamma_fn(s1) for s1 in P1.solutions}
    kappa = None
    for f1 in P1.instances:
        f2 = beta_fn(f1)
        P2.inst_idx(f2)
        sz1, sz2 = P1.size(f1), P2.size(f2)
        if sz1 == 0:
            if sz2 != 0:
                raise SimpleReductionInvalidError(
                    f"size identity fails at {label(f1)}: |f1| = 0, |beta(f1)| = {sz2}", witness=(f1, None))
        else:
            ratio = sz2 / sz1
            if kappa is None:
                kappa = ratio
            elif ratio != kappa:
                raise SimpleReductionInvalidError(
                    f"size ratio not constant at {label(f1)}: {ratio} vs {kappa}", witness=(f1, None))
        row1 = P1.value_row(f1)
        row2 = P2.value_row(f2)
        for j, s1 in enumerate(P1.solutions):
            v2 = row2[P2.sol_idx(images[s1])]
            if v2 != alpha * row1[j] + mu * sz1:
                raise SimpleReductionInvalidError(
                    f"value identity fails at {label(f1)}, {label(s1)}: "
                    f"{v2} != {alpha} * {row1[j]} + {mu} * {sz1}", witness=(f1, s1))
    if kappa is None:
        kappa = Fraction(1)
    exact = True
    if check_exact:
        for f1 in P1.instances:
            o1 = brute_force_optimum(P1, f1)
            o2 = brute_force_optimum(P2, beta_fn(f1))
            if o2 != alpha * o1 + mu * P1.size(f1):
                exact = False
                break
    a = abs(alpha)
    beta = {f1: ([(beta_fn(f1), 1 / a)], (-mu if alpha > 0 else mu) * P1.size(f1) / a) for f1 in P1.instances}
    gamma = {s1: [(images[s1], 1)] for s1 in P1.solutions}
    data = SimpleData(alpha, mu, kappa, exact, abs(alpha) + mu)
    return Reduction(beta, gamma, (P1.sense, P2.sense), {"simple": data})


def simple_target_rates(data: SimpleData, tau1, sigma1) -> tuple[Fraction, Fraction]:
    """(tau2, sigma2) per unit target size; sigma2 is only valid for exact reductions."""
    if not data.exact:
        raise ReductionError("sigma2 = alpha sigma1 + mu needs an exact reduction")
    t = (data.alpha * Fraction(tau1) + data.mu) / data.kappa
    s = (data.alpha * Fraction(sigma1) + data.mu) / data.kappa
    return t, s


# ---------------------------------------------------------------- matrix reductions


@dataclass
class MatrixReduction:
    """M1 = R M2 Cm + t 1^T; Cm is stored sparsely as columns [(row index, a)]."""

    R: Matrix
    Cm_cols: list[list[tuple[int, Fraction]]]
    t: list[Fraction]
    n2: int
    rows1: list = field(default_factory=list)
    rows2: list = field(default_factory=list)

    def dense_C(self) -> Matrix:
        C = [[ZERO] * len(self.Cm_cols) for _ in range(self.n2)]
        for j, col in enumerate(self.Cm_cols):
            for i, a in col:
                C[i][j] += a
        return C

    def apply(self, M2: Matrix) -> Matrix:
        """R M2 Cm + t 1^T."""
        M2C = [[sum((a * row[i] for i, a in col), ZERO) for col in self.Cm_cols] for row in M2]
        out = []
        for r, tv in zip(self.R, self.t):
            acc = [tv] * len(self.Cm_cols)
            for k, b in enumerate(r):
                if b:
                    acc = [x + b * y for x, y in zip(acc, M2C[k])]
            out.append(acc)
        return out

    def then(self, inner: "MatrixReduction") -> "MatrixReduction":
        """Compose with a reduction of the target: R = R1 R2, Cm = Cm2 Cm1, t = R1 t2 + t1."""
        from .rational import matmul

        if (len(self.R[0]) if self.R else 0) != len(inner.R) or len(inner.Cm_cols) != self.n2:
            raise ShapeError("matrix reductions do not chain")
        R = matmul(self.R, inner.R, inner=len(inner.R))
        cols = []
        for col in self.Cm_cols:
            acc: dict = {}
            for i, a in col:
                for i2, a2 in inner.Cm_cols[i]:
                    acc[i2] = acc.get(i2, ZERO) + a * a2
            cols.append(sorted((k, v) for k, v in acc.items() if v))
        t = [sum((b * t2 for b, t2 in zip(r, inner.t)), ZERO) + t1 for r, t1 in zip(self.R, self.t)]
        return MatrixReduction(R, cols, t, inner.n2, self.rows1, inner.rows2)


def matrix_reduction(red: Reduction, P1: ProblemSpec, G1: Guarantees,
                     P2: ProblemSpec, G2: Guarantees, check: bool = True) -> MatrixReduction:
    """Build (R, Cm, t) and, with ``check``, assert M1 = R M2 Cm + t 1 on the slack matrices."""
    from .slack import build_slack

    S1 = build_slack(P1, G1)
    S2 = build_slack(P2, G2)
    idx2 = {f: k for k, f in enumerate(S2.rows)}
    R, t = [], []
    for f1 in S1.rows:
        terms, shift = red.beta[f1]
        row = [ZERO] * len(S2.rows)
        for f2, b in terms:
            if f2 not in idx2:
                raise ReductionError(f"beta({label(f1)}) leaves the sound target instances")
            row[idx2[f2]] += b
        R.append(row)
        c2 = sum((b * Fraction(G2.C[f2]) for f2, b in terms), ZERO)
        c1 = Fraction(G1.C[f1])
        if P1.sense.is_max:
            t.append(c1 - shift - c2 if red.same_sense else c1 - shift + c2)
        else:
            t.append(shift + c2 - c1 if red.same_sense else shift - c2 - c1)
    cols = [[(P2.sol_idx(s2), a) for s2, a in red.gamma[s1]] for s1 in P1.solutions]
    mr = MatrixReduction(R, cols, t, len(P2.solutions), list(S1.rows), list(S2.rows))
    if any(v < 0 for v in t) or any(v < 0 for r in R for v in r):
        raise InternalConsistencyError("matrix reduction has a negative component")
    for col in cols:
        if sum((a for _, a in col), ZERO) != 1:
            raise InternalConsistencyError("a column of Cm does not sum to one")
    if check and mr.apply(S2.entries) != S1.entries:
        raise InternalConsistencyError("M1 != R M2 Cm + t 1 although the reduction was supplied")
    return mr


def compose_lp(mr: MatrixReduction, F2: LPFactorization, M2: Matrix | None = None,
               M1: Matrix | None = None) -> LPFactorization:
    """T1 = R T2, U1 = U2 Cm, mu1 = R mu2 + t; the size is unchanged."""
    from .rational import matmul

    if M2 is not None and not verify_lp_factorization(M2, F2):
        raise FactorizationInvalidError("F2 does not factor M2")
    r = F2.size
    T1 = matmul(mr.R, F2.T, inner=len(F2.T)) if r else [[] for _ in mr.R]
    U1 = [[sum((a * Urow[i] for i, a in col), ZERO) for col in mr.Cm_cols] for Urow in F2.U]
    mu1 = [sum((b * m for b, m in zip(row, F2.mu)), ZERO) + tv for row, tv in zip(mr.R, mr.t)]
    F1 = LPFactorization(T1, U1, mu1, n_cols=len(mr.Cm_cols))
    if M1 is not None and not verify_lp_factorization(M1, F1):
        raise FactorizationInvalidError("composed factorization does not reproduce M1")
    return F1


def _lin(coeffs, mats, size):
    out = [[ZERO] * size for _ in range(size)]
    for c, X in zip(coeffs, mats):
        if c:
            for i in range(size):
                for j in range(size):
                    if X[i][j]:
                        out[i][j] += c * X[i][j]
    return out


def compose_sdp(mr: MatrixReduction, F2: SDPFactorization, M2: Matrix | None = None,
                M1: Matrix | None = None) -> SDPFactorization:
    """T^_f = sum_i R(f,i) T_i, U^_s = sum_j U_j Cm(j,s), mu^ = R mu + t."""
    if M2 is not None and not verify_sdp_factorization(M2, F2):
        raise FactorizationInvalidError("F2 does not factor M2")
    r = F2.size
    Ts = [_lin(row, F2.Ts, r) for row in mr.R]
    Us = []
    for col in mr.Cm_cols:
        coeffs = [ZERO] * len(F2.Us)
        for i, a in col:
            coeffs[i] += a
        Us.append(_lin(coeffs, F2.Us, r))
    mu = [sum((b * m for b, m in zip(row, F2.mu)), ZERO) + tv for row, tv in zip(mr.R, mr.t)]
    F1 = SDPFactorization(Ts, Us, mu)
    if M1 is not None and not verify_sdp_factorization(M1, F1):
        raise FactorizationInvalidError("composed SDP factorization does not reproduce M1")
    return F1
