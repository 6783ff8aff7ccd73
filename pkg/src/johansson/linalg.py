"""Exact integer linear algebra: Smith normal form with certificates,
integer kernels and solving, invariant factors, and GF(2) rank.

All matrices are lists of lists of Python ints (rows).  Everything here is
pure and small-scale; no external numeric dependencies.
"""

from __future__ import annotations


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    if not A:
        return []
    rb = len(B)
    cb = len(B[0]) if B else 0
    out = []
    for row in A:
        assert len(row) == rb
        out.append([sum(row[k] * B[k][j] for k in range(rb)) for j in range(cb)])
    return out


def _row_add(A, i, j, c):
    # row i += c * row j
    Ai, Aj = A[i], A[j]
    for k in range(len(Ai)):
        Ai[k] += c * Aj[k]


def _col_add(A, i, j, c):
    # col i += c * col j
    for row in A:
        row[i] += c * row[j]


def _row_swap(A, i, j):
    A[i], A[j] = A[j], A[i]


def _col_swap(A, i, j):
    for row in A:
        row[i], row[j] = row[j], row[i]


def smith_normal_form(M):
    """Return (D, U, V) with U*M*V = D diagonal, d1 | d2 | ..., U, V unimodular."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    A = [list(r) for r in M]
    U = identity(rows)
    V = identity(cols)

    def diagonalize(t0):
        t = t0
        while t < min(rows, cols):
            # minimal-abs nonzero pivot in the trailing submatrix
            piv = None
            for i in range(t, rows):
                for j in range(t, cols):
                    a = A[i][j]
                    if a and (piv is None or abs(a) < abs(A[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                return
            if piv[0] != t:
                _row_swap(A, t, piv[0]); _row_swap(U, t, piv[0])
            if piv[1] != t:
                _col_swap(A, t, piv[1]); _col_swap(V, t, piv[1])
            if A[t][t] < 0:
                _row_add(A, t, t, -2); _row_add(U, t, t, -2)
            p = A[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = A[i][t] // p
                if q:
                    _row_add(A, i, t, -q); _row_add(U, i, t, -q)
                if A[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = A[t][j] // p
                if q:
                    _col_add(A, j, t, -q); _col_add(V, j, t, -q)
                if A[t][j]:
                    dirty = True
            if dirty:
                continue  # a smaller remainder appeared; re-pick the pivot
            t += 1

    diagonalize(0)
    # divisibility fix-up d_i | d_{i+1}
    r = min(rows, cols)
    i = 0
    while i < r - 1:
        a, b = A[i][i], A[i + 1][i + 1]
        if a and b % a != 0:
            _col_add(A, i, i + 1, 1); _col_add(V, i, i + 1, 1)
            diagonalize(i)
            i = 0
            continue
        i += 1
    return A, U, V


def rank_z(M):
    D, _, _ = smith_normal_form(M)
    return sum(1 for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i])


def kernel_z(M):
    """Basis of the integer kernel {x : M x = 0} as a list of column vectors.

    The basis is saturated (spans the kernel as a direct summand)."""
    cols = len(M[0]) if M else 0
    if not M:
        return [[1 if i == j else 0 for i in range(cols)] for j in range(cols)]
    D, _, V = smith_normal_form(M)
    r = sum(1 for i in range(min(len(D), cols)) if D[i][i])
    return [[V[i][j] for i in range(cols)] for j in range(r, cols)]


def solve_z(M, b):
    """One integer solution x of M x = b, or None."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    D, U, V = smith_normal_form(M)
    c = [sum(U[i][k] * b[k] for k in range(rows)) for i in range(rows)]
    y = [0] * cols
    for i in range(rows):
        d = D[i][i] if i < cols else 0
        if d:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
        elif c[i] != 0:
            return None
    return [sum(V[i][k] * y[k] for k in range(cols)) for i in range(cols)]


def invariant_factors(rel_rows, ngens):
    """Abelian group Z^ngens / <rows>: returns (torsion factors > 1, free rank)."""
    if not rel_rows:
        return [], ngens
    assert all(len(r) == ngens for r in rel_rows)
    D, _, _ = smith_normal_form(rel_rows)
    diag = [D[i][i] for i in range(min(len(rel_rows), ngens))]
    nz = [abs(d) for d in diag if d]
    torsion = [d for d in nz if d > 1]
    return torsion, ngens - len(nz)


def gf2_rank(rows):
    """Rank over GF(2); rows are bitmask ints."""
    basis = []
    rank = 0
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
            rank += 1
    return rank


def gf2_dim_quotient(rel_rows, ngens):
    """Dimension of (Z/2)^ngens / <rows mod 2>; rel_rows are integer rows."""
    masks = []
    for row in rel_rows:
        m = 0
        for j, v in enumerate(row):
            if v % 2:
                m |= 1 << j
        masks.append(m)
    return ngens - gf2_rank(masks)
