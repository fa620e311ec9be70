"""Dense exact linear solve (Bareiss elimination with row pivoting)."""

from __future__ import annotations


class Singular(ArithmeticError):
    pass


def solve(A, b, field):
    """Solve A x = b for a square system over ``field``."""
    n = len(A)
    M = [[field(v) for v in row] + [field(bi)] for row, bi in zip(A, b)]
    prev = field.one
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k]), None)
        if piv is None:
            raise Singular(k)
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
        mkk = M[k][k]
        rowk = M[k]
        for i in range(k + 1, n):
            rowi = M[i]
            mik = rowi[k]
            for j in range(k + 1, n + 1):
                rowi[j] = (rowi[j] * mkk - mik * rowk[j]) / prev
            rowi[k] = field.zero
        prev = mkk
    x = [field.zero] * n
    for i in range(n - 1, -1, -1):
        acc = M[i][n]
        for j in range(i + 1, n):
            if M[i][j]:
                acc = acc - M[i][j] * x[j]
        x[i] = acc / M[i][i]
    return x
