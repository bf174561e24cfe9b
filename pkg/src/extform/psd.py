"""Exact positive-semidefiniteness certificates via symmetric LDL^T with pivoting."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .rational import Matrix


def is_symmetric(A: Sequence[Sequence]) -> bool:
    n = len(A)
    return all(len(r) == n for r in A) and all(A[i][j] == A[j][i] for i in range(n) for j in range(i))


def ldl_psd(A: Sequence[Sequence]) -> tuple[list[int], Matrix, list[Fraction]] | None:
    """Return ``(perm, L, D)`` with P A P^T = L diag(D) L^T and D >= 0, or None if A is not PSD.

    Diagonal pivoting picks the largest remaining diagonal entry. A zero pivot
    whose column is not zero proves the matrix indefinite.
    """
    if not is_symmetric(A):
        return None
    n = len(A)
    W = [[Fraction(v) for v in r] for r in A]
    perm = list(range(n))
    L = [[Fraction(0)] * n for _ in range(n)]
    D = [Fraction(0)] * n
    for k in range(n):
        p = max(range(k, n), key=lambda i: (W[i][i], -i))
        if p != k:
            W[k], W[p] = W[p], W[k]
            for row in W:
                row[k], row[p] = row[p], row[k]
            perm[k], perm[p] = perm[p], perm[k]
            L[k], L[p] = L[p], L[k]
        d = W[k][k]
        if d < 0:
            return None
        L[k][k] = Fraction(1)
        if d == 0:
            if any(W[i][k] != 0 for i in range(k + 1, n)):
                return None
            continue
        D[k] = d
        for i in range(k + 1, n):
            L[i][k] = W[i][k] / d
        for i in range(k + 1, n):
            if W[i][k] == 0:
                continue
            for j in range(k + 1, n):
                W[i][j] -= L[i][k] * W[k][j]
        for i in range(k + 1, n):
            W[i][k] = W[k][i] = Fraction(0)
    return perm, [row[:] for row in L], D


def is_psd(A: Sequence[Sequence]) -> bool:
    return ldl_psd(A) is not None


def check_ldl(A: Sequence[Sequence], cert) -> bool:
    """Re-multiply a certificate and compare with A exactly."""
    perm, L, D = cert
    n = len(A)
    if any(d < 0 for d in D):
        return False
    for i in range(n):
        for j in range(n):
            v = sum((L[i][k] * D[k] * L[j][k] for k in range(n)), Fraction(0))
            if v != A[perm[i]][perm[j]]:
                return False
    return True


def trace_product(A: Sequence[Sequence], B: Sequence[Sequence]) -> Fraction:
    return sum((A[i][j] * B[j][i] for i in range(len(A)) for j in range(len(A))), Fraction(0))


def diag(v: Sequence) -> Matrix:
    n = len(v)
    return [[Fraction(v[i]) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
