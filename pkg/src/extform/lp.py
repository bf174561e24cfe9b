"""Exact two-phase simplex over the rationals, with Bland's anti-cycling rule."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)


@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: list[Fraction] | None = None
    value: Fraction | None = None
    ray: list[Fraction] | None = None


def _pivot(T: list[list[Fraction]], obj: list[Fraction], r: int, c: int) -> None:
    piv = T[r][c]
    T[r] = [v / piv for v in T[r]]
    row = T[r]
    for i, other in enumerate(T):
        if i != r and other[c] != 0:
            f = other[c]
            T[i] = [a - f * b for a, b in zip(other, row)]
    if obj[c] != 0:
        f = obj[c]
        obj[:] = [a - f * b for a, b in zip(obj, row)]


def _run(T, obj, basis, allowed: int):
    """Minimize with reduced-cost row ``obj``; columns >= ``allowed`` never enter.

    Returns None at optimum, or the entering column of an unbounded ray.
    """
    while True:
        enter = next((j for j in range(allowed) if obj[j] < 0), None)
        if enter is None:
            return None
        best = None
        for i, row in enumerate(T):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return enter
        r = best[1]
        _pivot(T, obj, r, enter)
        basis[r] = enter


def solve_standard(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """min c.x subject to A x = b, x >= 0."""
    n = len(c)
    c = [Fraction(v) for v in c]
    rows = []
    for Ai, bi in zip(A, b):
        Ai = [Fraction(v) for v in Ai]
        bi = Fraction(bi)
        if len(Ai) != n:
            raise ValueError("row length differs from cost length")
        if bi < 0:
            Ai, bi = [-v for v in Ai], -bi
        rows.append((Ai, bi))
    m = len(rows)
    if m == 0:
        if any(v < 0 for v in c):
            j = next(j for j, v in enumerate(c) if v < 0)
            ray = [Fraction(int(i == j)) for i in range(n)]
            return LPResult("unbounded", [ZERO] * n, None, ray)
        return LPResult("optimal", [ZERO] * n, ZERO)

    # phase one with one artificial per row
    T = [Ai + [Fraction(int(i == k)) for k in range(m)] + [bi] for i, (Ai, bi) in enumerate(rows)]
    basis = [n + i for i in range(m)]
    obj = [ZERO] * (n + m + 1)
    for row in T:
        for j in range(n):
            obj[j] -= row[j]
        obj[-1] -= row[-1]
    _run(T, obj, basis, n)
    if obj[-1] != 0:
        return LPResult("infeasible")

    # drive artificials out; drop redundant rows
    i = 0
    while i < len(T):
        if basis[i] >= n:
            j = next((j for j in range(n) if T[i][j] != 0), None)
            if j is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, obj, i, j)
            basis[i] = j
        i += 1
    T = [row[:n] + [row[-1]] for row in T]

    obj = c + [ZERO]
    for i, row in enumerate(T):
        cb = obj[basis[i]]
        if cb != 0:
            obj = [a - cb * v for a, v in zip(obj, row)]
    enter = _run(T, obj, basis, n)
    x = [ZERO] * n
    for i, j in enumerate(basis):
        x[j] = T[i][-1]
    if enter is not None:
        ray = [ZERO] * n
        ray[enter] = Fraction(1)
        for i, j in enumerate(basis):
            ray[j] = -T[i][enter]
        return LPResult("unbounded", x, None, ray)
    return LPResult("optimal", x, sum((ci * xi for ci, xi in zip(c, x)), ZERO))


def minimize_ineq(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """min c.x subject to A x <= b with x free.

    Free variables are split as x = p - q and each row gets a slack.
    """
    d = len(c)
    m = len(A)
    cs = [Fraction(v) for v in c] + [-Fraction(v) for v in c] + [ZERO] * m
    As = []
    for i, Ai in enumerate(A):
        Ai = [Fraction(v) for v in Ai]
        As.append(Ai + [-v for v in Ai] + [Fraction(int(k == i)) for k in range(m)])
    res = solve_standard(cs, As, b)
    if res.status == "infeasible":
        return res
    x = [res.x[j] - res.x[d + j] for j in range(d)]
    if res.status == "unbounded":
        ray = [res.ray[j] - res.ray[d + j] for j in range(d)]
        return LPResult("unbounded", x, None, ray)
    return LPResult("optimal", x, res.value)


def maximize_ineq(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    res = minimize_ineq([-Fraction(v) for v in c], A, b)
    if res.status == "optimal":
        res.value = -res.value
    return res


def feasible_point(A: Sequence[Sequence], b: Sequence, d: int) -> list[Fraction] | None:
    res = minimize_ineq([0] * d, A, b)
    return None if res.status == "infeasible" else res.x
