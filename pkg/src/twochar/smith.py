"""Smith normal form over the integers, with optional transform tracking.

`smith_normal_form(A)` returns diag, U, V, Vinv with U*A*V = diag(d_1..d_r),
d_i >= 0 and d_i | d_{i+1}.  U and V are unimodular; Vinv is V^-1.  The
transforms are only materialized when requested, since the cochain matrices
get large.
"""

from __future__ import annotations

from math import gcd


class SNF:
    __slots__ = ("diag", "U", "V", "Vinv", "rank")

    def __init__(self, diag, U, V, Vinv):
        self.diag = diag
        self.U = U
        self.V = V
        self.Vinv = Vinv
        self.rank = sum(1 for d in diag if d)


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(rows, want_U=False, want_V=False, want_Vinv=False):
    A = [list(r) for r in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    U = _identity(m) if want_U else None
    V = _identity(n) if want_V else None
    Vinv = _identity(n) if want_Vinv else None

    def swap_rows(i, j):
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def add_row(i, j, c):
        """row i += c * row j."""
        Ai, Aj = A[i], A[j]
        for k in range(n):
            if Aj[k]:
                Ai[k] += c * Aj[k]
        if U is not None:
            Ui, Uj = U[i], U[j]
            for k in range(m):
                if Uj[k]:
                    Ui[k] += c * Uj[k]

    def swap_cols(i, j):
        if i == j:
            return
        for row in A:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]
        if Vinv is not None:
            Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_col(j, i, c):
        """col j += c * col i;  E = I + c*e_(i,j), so Vinv row i -= c * row j."""
        for row in A:
            if row[i]:
                row[j] += c * row[i]
        if V is not None:
            for row in V:
                if row[i]:
                    row[j] += c * row[i]
        if Vinv is not None:
            Ri, Rj = Vinv[i], Vinv[j]
            for k in range(n):
                if Rj[k]:
                    Ri[k] -= c * Rj[k]

    def negate_row(i):
        A[i] = [-x for x in A[i]]
        if U is not None:
            U[i] = [-x for x in U[i]]

    def clear_position(t):
        """Bring the smallest pivot to (t, t) and zero out its row/column."""
        while True:
            piv = None
            best = None
            for i in range(t, m):
                Ai = A[i]
                for j in range(t, n):
                    v = Ai[j]
                    if v and (best is None or abs(v) < best):
                        best = abs(v)
                        piv = (i, j)
                        if best == 1:
                            break
                if best == 1:
                    break
            if piv is None:
                return False
            swap_rows(t, piv[0])
            swap_cols(t, piv[1])
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    if q:
                        add_row(i, t, -q)
                    if A[i][t]:
                        swap_rows(t, i)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    if q:
                        add_col(j, t, -q)
                    if A[t][j]:
                        swap_cols(t, j)
                        dirty = True
                        break
            if not dirty:
                return True

    def fix_pair(i, j):
        """Turn the diagonal block diag(d_i, d_j) into diag(gcd, lcm).

        All operations stay inside rows/cols {i, j}: both rows are zero away
        from these two columns, and the block ops preserve that.
        """
        add_col(i, j, 1)  # A[j][i] = d_j
        while A[j][i] or A[i][j]:
            if A[j][i]:
                if A[i][i] == 0 or abs(A[j][i]) < abs(A[i][i]):
                    swap_rows(i, j)
                if A[i][i] and A[j][i]:
                    add_row(j, i, -(A[j][i] // A[i][i]))
                continue
            if A[i][j]:
                if A[i][i] == 0 or abs(A[i][j]) < abs(A[i][i]):
                    swap_cols(i, j)
                if A[i][i] and A[i][j]:
                    add_col(j, i, -(A[i][j] // A[i][i]))
        for k in (i, j):
            if A[k][k] < 0:
                negate_row(k)

    t = 0
    while t < min(m, n) and clear_position(t):
        t += 1
    rank = t
    for i in range(rank):
        if A[i][i] < 0:
            negate_row(i)
    # enforce the divisibility chain d_i | d_(i+1) by adjacent-pair fixes
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            if A[i + 1][i + 1] % A[i][i]:
                fix_pair(i, i + 1)
                changed = True
    diag = [A[i][i] if i < rank else 0 for i in range(min(m, n))]
    return SNF(diag, U, V, Vinv)


def solve_mod(A, rhs, M, *, _snf_cache=None):
    """One solution x of A x == rhs (mod M), or None.

    A is an integer matrix (list of rows), rhs a vector mod M.
    """
    if _snf_cache is None:
        _snf_cache = smith_normal_form(A, want_U=True, want_V=True)
    snf = _snf_cache
    m = len(A)
    n = len(A[0]) if m else 0
    u_rhs = [sum(snf.U[i][k] * rhs[k] for k in range(m) if snf.U[i][k]) % M
             for i in range(m)]
    y = [0] * n
    for i in range(m):
        s = snf.diag[i] if i < len(snf.diag) else 0
        r = u_rhs[i]
        if s == 0:
            if r % M:
                return None
            continue
        g = gcd(s, M)
        if r % g:
            return None
        Mg = M // g
        if Mg == 1:
            y[i] = 0
        else:
            y[i] = ((r // g) * pow(s // g, -1, Mg)) % Mg
    x = [sum(snf.V[i][k] * y[k] for k in range(n) if snf.V[i][k]) % M
         for i in range(n)]
    return x
