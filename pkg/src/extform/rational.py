"""Exact rational helpers: parsing, formatting and small dense linear algebra.

Matrices are plain lists of rows of :class:`fractions.Fraction`.
"""
from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import RationalParseError, ShapeError

Matrix = list[list[Fraction]]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or an integer literal. Floats are rejected."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise RationalParseError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise RationalParseError(f"not a rational: {text!r}")
    m = _RATIONAL_RE.match(text)
    if not m:
        raise RationalParseError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise RationalParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def fmt_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def to_matrix(rows: Iterable[Iterable]) -> Matrix:
    out = [[Fraction(v) for v in row] for row in rows]
    if out and any(len(r) != len(out[0]) for r in out):
        raise ShapeError("ragged matrix")
    return out


def shape(M: Sequence[Sequence]) -> tuple[int, int]:
    return len(M), (len(M[0]) if M else 0)


def zeros(m: int, n: int) -> Matrix:
    return [[Fraction(0)] * n for _ in range(m)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(M: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*M)] if M else []


def matmul(A: Sequence[Sequence], B: Sequence[Sequence], inner: int | None = None) -> Matrix:
    """Dense product; ``inner`` gives the shared dimension when it is 0."""
    m = len(A)
    k = len(B) if inner is None else inner
    n = len(B[0]) if B else 0
    if A and len(A[0]) != k:
        raise ShapeError(f"inner dimensions differ: {len(A[0])} vs {k}")
    out = []
    for i in range(m):
        row = [Fraction(0)] * n
        Ai = A[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(n):
                    b = Bt[j]
                    if b:
                        row[j] += a * b
        out.append(row)
    return out


def max_abs(M: Sequence[Sequence]) -> Fraction:
    best = Fraction(0)
    for row in M:
        for v in row:
            if abs(v) > best:
                best = abs(v)
    return Fraction(best)


def is_nonnegative(M: Sequence[Sequence]) -> bool:
    return all(v >= 0 for row in M for v in row)


def rref(M: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot column indices."""
    A = [list(map(Fraction, r)) for r in M]
    m, n = shape(A)
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        A[r] = [v / piv for v in A[r]]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M: Sequence[Sequence]) -> int:
    if not M or not M[0]:
        return 0
    return len(rref(M)[1])


def affine_rank_of_columns(M: Sequence[Sequence]) -> int:
    """Dimension of the span of differences between columns."""
    m, n = shape(M)
    if n <= 1:
        return 0
    D = [[M[i][j] - M[i][0] for j in range(1, n)] for i in range(m)]
    return rank(D)


def det(M: Sequence[Sequence]) -> Fraction:
    A = [list(map(Fraction, r)) for r in M]
    n = len(A)
    if any(len(r) != n for r in A):
        raise ShapeError("determinant of non-square matrix")
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = -d
        piv = A[c][c]
        d *= piv
        for i in range(c + 1, n):
            if A[i][c] != 0:
                f = A[i][c] / piv
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return d


def inverse(M: Sequence[Sequence]) -> Matrix:
    n = len(M)
    aug = [list(map(Fraction, M[i])) + identity(n)[i] for i in range(n)]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ShapeError("matrix is singular")
    return [row[n:] for row in R]


def submatrix(M: Sequence[Sequence], rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return [[M[i][j] for j in cols] for i in rows]


def independent_columns(M: Sequence[Sequence]) -> list[int]:
    """Lexicographically first maximal set of independent columns."""
    return rref(M)[1]


def nonzero_minors(M: Sequence[Sequence], r: int, cols: Sequence[int]):
    """Yield ``(rows, det)`` over all r-row subsets, lexicographically."""
    for rows in combinations(range(len(M)), r):
        yield rows, det(submatrix(M, rows, cols))
