"""Exact linear algebra over Q (and Q(sqrt2, sqrt3) for signatures).

Matrices are plain lists of rows.  Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction


def _sign(x) -> int:
    if hasattr(x, "sign"):
        return x.sign()
    return (x > 0) - (x < 0)


def signature(matrix) -> tuple[int, int, int]:
    """Inertia ``(n_pos, n_neg, n_zero)`` of a symmetric matrix.

    Uses symmetric Gaussian pivoting (congruence transforms only).  When
    every remaining diagonal entry is zero but some off-diagonal entry
    ``m_ij`` is not, the basis vector ``e_i`` is replaced by ``e_i + e_j``
    which makes the new diagonal entry ``2 m_ij`` nonzero.
    """
    n = len(matrix)
    m = [[x if hasattr(x, "sign") else Fraction(x) for x in row] for row in matrix]
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise ValueError("signature() needs a symmetric matrix")
    alive = list(range(n))
    pos = neg = 0
    while alive:
        piv = next((i for i in alive if m[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in alive for j in alive if i < j and m[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for k in alive:
                m[i][k] = m[i][k] + m[j][k]
            for k in alive:
                m[k][i] = m[k][i] + m[k][j]
            piv = i
        d = m[piv][piv]
        if _sign(d) > 0:
            pos += 1
        else:
            neg += 1
        alive.remove(piv)
        row = m[piv]
        for j in alive:
            f = m[j][piv]
            if f == 0:
                continue
            f = f / d
            mj = m[j]
            for k in alive:
                if row[k] != 0:
                    mj[k] = mj[k] - f * row[k]
    return pos, neg, len(alive)


def determinant(matrix) -> int | Fraction:
    """Determinant by fraction-free (Bareiss) elimination for integer input."""
    n = len(matrix)
    if n == 0:
        return 1
    if all(isinstance(x, int) for row in matrix for x in row):
        m = [list(row) for row in matrix]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]
    m = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            if f:
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return det


def rank(rows) -> int:
    """Rank of a rational matrix."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def inverse(matrix) -> list[list[Fraction]]:
    """Inverse of a nonsingular rational matrix (Gauss-Jordan)."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return [row[n:] for row in m]


def vec_mat(v, matrix):
    """Row vector times matrix."""
    ncols = len(matrix[0])
    return [sum(v[i] * matrix[i][j] for i in range(len(v)) if v[i]) for j in range(ncols)]


def mat_mul(a, b):
    return [vec_mat(row, b) for row in a]


def transpose(matrix):
    return [list(col) for col in zip(*matrix)]
