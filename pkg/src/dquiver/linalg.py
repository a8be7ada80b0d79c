"""Exact integer and finite-field linear algebra helpers.

Determinants use fraction-free Bareiss elimination over the integers;
similarity over F_p is decided through the invariant factors (Frobenius
data) of xI - S, computed by Smith normal form over F_p[x].
"""

from __future__ import annotations

IntMatrix = tuple[tuple[int, ...], ...]


def bareiss_det(matrix) -> int:
    """Exact determinant via fraction-free elimination."""
    m = [list(row) for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


def transpose(matrix) -> IntMatrix:
    n = len(matrix)
    return tuple(tuple(matrix[j][i] for j in range(n)) for i in range(n))


# -- arithmetic over F_p -------------------------------------------------


def _inv_mod(a: int, p: int) -> int:
    return pow(a % p, p - 2, p)


def mat_mod(matrix, p: int) -> list[list[int]]:
    return [[x % p for x in row] for row in matrix]


def mat_mul_mod(a, b, p: int) -> list[list[int]]:
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) % p for j in range(n)]
        for i in range(n)
    ]


def mat_inv_mod(matrix, p: int) -> list[list[int]]:
    n = len(matrix)
    a = [[x % p for x in row] + [1 if i == j else 0 for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] % p), None)
        if pivot is None:
            raise ZeroDivisionError(f"matrix singular mod {p}")
        a[col], a[pivot] = a[pivot], a[col]
        inv = _inv_mod(a[col][col], p)
        a[col] = [(x * inv) % p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def asymmetry_mod(C, p: int) -> list[list[int]]:
    """S = C * (C^T)^{-1} reduced mod p."""
    return mat_mul_mod(mat_mod(C, p), mat_inv_mod(transpose(C), p), p)


# -- polynomials over F_p (dense coefficient lists, low degree first) ----


def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _padd(a, b, p):
    out = [0] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % p
    return _ptrim(out)


def _pscale(a, c, p):
    return _ptrim([(v * c) % p for v in a])


def _pshift(a, k):
    return [0] * k + a if a else []


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _pdivmod(a, b, p):
    a = list(a)
    if not b:
        raise ZeroDivisionError
    inv = _inv_mod(b[-1], p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    for i in range(len(a) - len(b), -1, -1):
        c = (a[i + len(b) - 1] * inv) % p
        if c:
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] = (a[i + j] - c * y) % p
    return _ptrim(q), _ptrim(a)


def _pmonic(a, p):
    if not a:
        return a
    return _pscale(a, _inv_mod(a[-1], p), p)


def invariant_factors_mod(S, p: int) -> tuple[tuple[int, ...], ...]:
    """Nontrivial invariant factors of xI - S over F_p, monic, by Smith
    normal form.  Two matrices are similar over F_p iff these agree."""
    n = len(S)
    # entries of xI - S as coefficient lists
    m: list[list[list[int]]] = [
        [
            _ptrim([(-S[i][j]) % p, 1] if i == j else [(-S[i][j]) % p])
            for j in range(n)
        ]
        for i in range(n)
    ]
    factors: list[tuple[int, ...]] = []
    for top in range(n):
        while True:
            # locate a nonzero entry of minimal degree in the submatrix
            best = None
            for i in range(top, n):
                for j in range(top, n):
                    if m[i][j] and (best is None or len(m[i][j]) < len(m[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            bi, bj = best
            m[top], m[bi] = m[bi], m[top]
            for row in m:
                row[top], row[bj] = row[bj], row[top]
            pivot = m[top][top]
            dirty = False
            for i in range(top + 1, n):
                if m[i][top]:
                    qpoly, r = _pdivmod(m[i][top], pivot, p)
                    if qpoly:
                        for j in range(top, n):
                            m[i][j] = _padd(
                                m[i][j], _pscale(_pmul(qpoly, m[top][j], p), p - 1, p), p
                            )
                    if _ptrim(list(r)):
                        dirty = True
            for j in range(top + 1, n):
                if m[top][j]:
                    qpoly, r = _pdivmod(m[top][j], pivot, p)
                    if qpoly:
                        for i in range(top, n):
                            m[i][j] = _padd(
                                m[i][j], _pscale(_pmul(qpoly, m[i][top], p), p - 1, p), p
                            )
                    if _ptrim(list(r)):
                        dirty = True
            if dirty:
                continue
            off = [
                (i, j)
                for i in range(top + 1, n)
                for j in range(top + 1, n)
                if m[i][j] and _pdivmod(m[i][j], pivot, p)[1]
            ]
            if off:
                # pivot must divide every remaining entry: absorb one row
                i = off[0][0]
                for j in range(top, n):
                    m[top][j] = _padd(m[top][j], m[i][j], p)
                continue
            rest_zero = all(
                not m[i][top] for i in range(top + 1, n)
            ) and all(not m[top][j] for j in range(top + 1, n))
            if rest_zero:
                break
        if m[top][top]:
            factors.append(tuple(_pmonic(m[top][top], p)))
    nontrivial = tuple(f for f in factors if len(f) > 1)
    return tuple(sorted(nontrivial))
