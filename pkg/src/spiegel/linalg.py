"""Dense exact linear algebra.

Three independent kits:
  * Gaussian elimination over any table field (int elements), used for
    kernels, ranks, solves and inverses at desk-scale dimensions.
  * Bit-packed elimination over GF(2) and GF(4) for the two hot paths
    (point counting and the p-th power solve) where rows are wide.
  * Smith normal form over arbitrary-precision integers and Hermite form
    over F_q[T], for class-group structure and ideal lattices.
"""

from __future__ import annotations

from .apoly import Poly


# ---------------------------------------------------------------------------
# Generic table-field elimination
# ---------------------------------------------------------------------------


def rref(rows: list[list[int]], field) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.inv(rows[r][c])
        if inv != 1:
            rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                coef = rows[i][c]
                ri, rr = rows[i], rows[r]
                rows[i] = [field.sub(x, field.mul(coef, y)) for x, y in zip(ri, rr)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r] + [[0] * ncols for _ in range(len(rows) - r)], pivots


def rank(rows: list[list[int]], field) -> int:
    return len(rref(rows, field)[1])


def kernel_basis(rows: list[list[int]], field, ncols: int | None = None) -> list[list[int]]:
    """Basis of the right kernel {v : M v = 0}."""
    if not rows:
        assert ncols is not None
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    ncols = len(rows[0])
    red, pivots = rref(rows, field)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            # pivot row r: x_pc = -sum over free columns
            v[pc] = field.neg(red[r][fc])
        basis.append(v)
    return basis


def solve(rows: list[list[int]], rhs: list[int], field) -> list[int] | None:
    """One solution of M x = rhs, or None."""
    if not rows:
        return None
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, field)
    n = len(rows[0])
    for r in range(len(red)):
        if not any(red[r][:n]) and red[r][n] != 0:
            return None
    x = [0] * n
    for r, pc in enumerate(pivots):
        if pc == n:
            return None
        x[pc] = red[r][n]
    return x


def mat_mul(a: list[list[int]], b: list[list[int]], field) -> list[list[int]]:
    nb = len(b[0])
    out = [[0] * nb for _ in range(len(a))]
    for i, arow in enumerate(a):
        orow = out[i]
        for k, x in enumerate(arow):
            if x:
                brow = b[k]
                for j in range(nb):
                    if brow[j]:
                        orow[j] = field.add(orow[j], field.mul(x, brow[j]))
    return out


def mat_vec(a: list[list[int]], v: list[int], field) -> list[int]:
    out = []
    for row in a:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = field.add(acc, field.mul(x, y))
        out.append(acc)
    return out


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_inv(rows: list[list[int]], field) -> list[list[int]]:
    n = len(rows)
    aug = [list(r) + ident for r, ident in zip(rows, identity(n))]
    red, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix not invertible")
    return [r[n:] for r in red[:n]]


# ---------------------------------------------------------------------------
# Packed rows over GF(2) and GF(4)
# ---------------------------------------------------------------------------


def solve_packed_gf2(rows: list[int], rhs: list[int], ncols: int) -> list[int] | None:
    """Solve M x = rhs over GF(2); rows are bitmasks (bit j = column j)."""
    aug = [r | (b << ncols) for r, b in zip(rows, rhs)]
    pivots: list[tuple[int, int]] = []
    nr = len(aug)
    row_at = 0
    for c in range(ncols):
        bit = 1 << c
        pr = next((i for i in range(row_at, nr) if aug[i] & bit), None)
        if pr is None:
            continue
        aug[row_at], aug[pr] = aug[pr], aug[row_at]
        piv = aug[row_at]
        for i in range(nr):
            if i != row_at and aug[i] & bit:
                aug[i] ^= piv
        pivots.append((row_at, c))
        row_at += 1
    rhs_bit = 1 << ncols
    for i in range(row_at, nr):
        if aug[i] & rhs_bit:
            return None
    x = [0] * ncols
    for r, c in pivots:
        if aug[r] & rhs_bit:
            x[c] = 1
    return x


class GF4Rows:
    """Rows over GF(4) packed as two bit-planes (lo, hi); 0,1,w,w^2 = 0,1,2,3."""

    @staticmethod
    def get(row: tuple[int, int], j: int) -> int:
        lo, hi = row
        return ((lo >> j) & 1) | (((hi >> j) & 1) << 1)

    @staticmethod
    def add(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
        return a[0] ^ b[0], a[1] ^ b[1]

    @staticmethod
    def scale(row: tuple[int, int], s: int) -> tuple[int, int]:
        lo, hi = row
        if s == 0:
            return 0, 0
        if s == 1:
            return row
        if s == 2:  # w*(a + b w) = b + (a+b) w
            return hi, lo ^ hi
        return lo ^ hi, lo  # w^2 * (a + b w) = (a+b) + a w


def solve_packed_gf4(
    rows: list[tuple[int, int]], rhs: list[int], ncols: int
) -> list[int] | None:
    """Solve over GF(4); elements encoded 0..3 as in fq.Fq(2,2)."""
    inv = {1: 1, 2: 3, 3: 2}
    aug = []
    for row, b in zip(rows, rhs):
        lo, hi = row
        aug.append((lo | ((b & 1) << ncols), hi | (((b >> 1) & 1) << ncols)))
    nr = len(aug)
    pivots: list[tuple[int, int]] = []
    row_at = 0
    for c in range(ncols):
        pr = next(
            (i for i in range(row_at, nr) if GF4Rows.get(aug[i], c)), None
        )
        if pr is None:
            continue
        aug[row_at], aug[pr] = aug[pr], aug[row_at]
        s = GF4Rows.get(aug[row_at], c)
        if s != 1:
            aug[row_at] = GF4Rows.scale(aug[row_at], inv[s])
        piv = aug[row_at]
        for i in range(nr):
            if i != row_at:
                coef = GF4Rows.get(aug[i], c)
                if coef:
                    aug[i] = GF4Rows.add(aug[i], GF4Rows.scale(piv, coef))
        pivots.append((row_at, c))
        row_at += 1
    for i in range(row_at, nr):
        if GF4Rows.get(aug[i], ncols):
            return None
    x = [0] * ncols
    for r, c in pivots:
        x[c] = GF4Rows.get(aug[r], ncols)
    return x


def rank_packed_gf2(rows: list[int]) -> int:
    pivots: list[tuple[int, int]] = []
    r = 0
    for row in rows:
        cur = row
        for pbit, prow in pivots:
            if cur & pbit:
                cur ^= prow
        if cur:
            pivots.append((cur & -cur, cur))
            r += 1
    return r


# ---------------------------------------------------------------------------
# Smith normal form over Z
# ---------------------------------------------------------------------------


def snf(mat: list[list[int]]) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """U, S, V with U*M*V = S, S diagonal with divisibility chain, det U,V = ±1."""
    m = [list(row) for row in mat]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    U = [[int(i == j) for j in range(nr)] for i in range(nr)]
    V = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def addmul_row(dst, src, k):
        m[dst] = [a + k * b for a, b in zip(m[dst], m[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def addmul_col(dst, src, k):
        for row in m:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    def negate_row(i):
        m[i] = [-a for a in m[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(nr, nc):
        # Find smallest nonzero entry in the remaining block as pivot.
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if m[i][j] and (best is None or abs(m[i][j]) < best[0]):
                    best = (abs(m[i][j]), i, j)
        if best is None:
            break
        _, bi, bj = best
        swap_rows(t, bi)
        swap_cols(t, bj)
        dirty = False
        for i in range(t + 1, nr):
            if m[i][t]:
                q = m[i][t] // m[t][t]
                addmul_row(i, t, -q)
                if m[i][t]:
                    dirty = True
        for j in range(t + 1, nc):
            if m[t][j]:
                q = m[t][j] // m[t][t]
                addmul_col(j, t, -q)
                if m[t][j]:
                    dirty = True
        if dirty:
            continue
        # Enforce divisibility of the rest of the block by the pivot.
        piv = m[t][t]
        offender = None
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if m[i][j] % piv:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            addmul_row(t, offender, 1)
            continue
        if piv < 0:
            negate_row(t)
        t += 1

    return U, m, V


def snf_diagonal(mat: list[list[int]]) -> list[int]:
    _, s, _ = snf(mat)
    return [s[i][i] for i in range(min(len(s), len(s[0]) if s else 0))]


def int_mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    nb = len(b[0])
    return [
        [sum(x * b[k][j] for k, x in enumerate(row)) for j in range(nb)]
        for row in a
    ]


def int_mat_inv_unimodular(u: list[list[int]]) -> list[list[int]]:
    """Inverse of an integer matrix with det ±1 (exact, fraction-free)."""
    n = len(u)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(u)]
    # Integer Gauss-Jordan via Bezout row ops (works since det = ±1).
    for c in range(n):
        pr = next(i for i in range(c, n) if aug[i][c])
        aug[c], aug[pr] = aug[pr], aug[c]
        # Reduce column c below and above via Euclid.
        for i in range(n):
            if i == c:
                continue
            while aug[i][c]:
                if abs(aug[i][c]) >= abs(aug[c][c]):
                    q = aug[i][c] // aug[c][c]
                    aug[i] = [a - q * b for a, b in zip(aug[i], aug[c])]
                else:
                    aug[c], aug[i] = aug[i], aug[c]
        if aug[c][c] < 0:
            aug[c] = [-a for a in aug[c]]
    for c in range(n):
        assert aug[c][c] == 1, "matrix was not unimodular"
    return [row[n:] for row in aug]


# ---------------------------------------------------------------------------
# Hermite form over A = F_q[T]
# ---------------------------------------------------------------------------


def hermite_form(cols: list[list[Poly]], field) -> list[list[Poly]]:
    """Canonical upper-triangular column HNF of the A-lattice spanned by cols.

    Input: generator columns (each a length-n list of Poly).  Output: n
    columns c_0..c_{n-1}, c_i with monic pivot at row i and entries above
    reduced mod the pivot.  Raises if the lattice has rank < n.
    """
    if not cols:
        raise ValueError("no generators")
    n = len(cols[0])
    work = [list(c) for c in cols]
    out: list[list[Poly]] = []
    for row in range(n - 1, -1, -1):
        # Use Euclid on the entries of `row` across remaining columns.
        live = [c for c in work if any(not c[i].is_zero() for i in range(row + 1))]
        work = live
        cands = [c for c in work if not c[row].is_zero()]
        if not cands:
            raise ValueError("lattice rank deficient")
        while True:
            cands.sort(key=lambda c: c[row].degree)
            pivot = cands[0]
            rest = cands[1:]
            done = True
            for c in rest:
                q = c[row] // pivot[row]
                for i in range(row + 1):
                    c[i] = c[i] - q * pivot[i]
                if not c[row].is_zero():
                    done = False
            cands = [pivot] + [c for c in rest if not c[row].is_zero()]
            if done or len(cands) == 1:
                break
        pivot = cands[0]
        lead = pivot[row].lead()
        if lead != 1:
            inv = field.inv(lead)
            for i in range(row + 1):
                pivot[i] = pivot[i].scale(inv)
        out.append(pivot)
        work = [c for c in work if c is not pivot]
    out.reverse()
    # Normalize: for columns j > i, reduce entry at row i of column j mod pivot i.
    for j in range(n):
        for i in range(j - 1, -1, -1):
            q = out[j][i] // out[i][i]
            if not q.is_zero():
                for k in range(i + 1):
                    out[j][k] = out[j][k] - q * out[i][k]
    return out


def hnf_membership(hnf: list[list[Poly]], vec: list[Poly]) -> bool:
    """Is vec in the lattice with the given triangular column basis?"""
    n = len(vec)
    v = list(vec)
    for i in range(n - 1, -1, -1):
        if v[i].is_zero():
            continue
        q, r = v[i].divmod(hnf[i][i])
        if not r.is_zero():
            return False
        for k in range(i + 1):
            v[k] = v[k] - q * hnf[i][k]
    return all(x.is_zero() for x in v)
