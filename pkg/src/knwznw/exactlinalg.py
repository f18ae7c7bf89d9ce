"""Exact linear algebra over the rationals.

Matrices are lists of rows of Rat.  Everything here is textbook Gaussian
elimination; sizes in this package stay small (tens of rows), so no
fraction-free or modular tricks are needed.
"""

from ._kernel import RAT0, RAT1, Rat


def zeros(nrows, ncols):
    return [[RAT0] * ncols for _ in range(nrows)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = RAT1
    return m


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[x * c for x in row] for row in a]


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c.num == 0:
                continue
            bt = b[t]
            for j in range(m):
                oi[j] = oi[j] + c * bt[j]
    return out


def mat_vec(a, v):
    return [sum((c * x for c, x in zip(row, v)), RAT0) for row in a]


def commutator(a, b):
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def is_zero_matrix(a):
    return all(x.num == 0 for row in a for x in row)


def kron(a, b):
    """Kronecker product acting on the lexicographic tensor basis."""
    bn = len(b)
    bm = len(b[0]) if b else 0
    out = zeros(len(a) * bn, (len(a[0]) if a else 0) * bm)
    for i, row in enumerate(a):
        for j, c in enumerate(row):
            if c.num == 0:
                continue
            for k in range(bn):
                for l in range(bm):
                    out[i * bn + k][j * bm + l] = c * b[k][l]
    return out


def rref(rows):
    """Reduced row echelon form (in place on a copy); returns (rref, pivots)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if m[i][c].num != 0:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = RAT1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c].num != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def rank(rows):
    if not rows:
        return 0
    return len(rref(rows)[0])


def nullspace(rows, ncols):
    """Basis of the solution space of rows · x = 0 (x of length ncols)."""
    if not rows:
        return [[RAT1 if i == j else RAT0 for i in range(ncols)]
                for j in range(ncols)]
    red, pivots = rref(rows)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free:
        v = [RAT0] * ncols
        v[f] = RAT1
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """One solution of rows · x = rhs, or None if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    for row in red:
        if all(x.num == 0 for x in row[:-1]) and row[-1].num != 0:
            return None
    x = [RAT0] * ncols
    for r, c in enumerate(pivots):
        if c == ncols:
            return None
        x[c] = red[r][-1]
    return x
