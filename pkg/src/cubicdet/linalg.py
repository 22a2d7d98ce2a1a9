"""Gaussian elimination over an exact field (raw values).

Pivoting is deterministic: the first nonzero entry in column order, so
bases returned by :func:`nullspace` depend only on the input matrix.
"""


def rref(K, rows, ncols=None):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = K.inv(rows[r][c])
        rows[r] = [K.mul(x, inv) for x in rows[r]]
        lead = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [K.sub(x, K.mul(f, y)) if y != 0 else x for x, y in zip(rows[i], lead)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(K, rows, ncols=None):
    return len(rref(K, rows, ncols)[1])


def nullspace(K, rows, ncols):
    """Basis of {v : rows . v = 0}, one vector per free column in order."""
    red, pivots = rref(K, rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = K.one
        for row, pc in zip(red, pivots):
            if row[f] != 0:
                v[pc] = K.neg(row[f])
        basis.append(v)
    return basis


def matmul(K, A, B):
    cols = list(zip(*B))
    return [[K.dot(row, col) for col in cols] for row in A]


def matvec(K, A, v):
    return [K.dot(row, v) for row in A]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def inverse(K, A):
    """Inverse of a square matrix, or None when singular."""
    n = len(A)
    aug = [list(row) + e for row, e in zip(A, identity(n))]
    red, pivots = rref(K, aug, n)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in red]


def det(K, A):
    n = len(A)
    M = [list(r) for r in A]
    result = K.one
    for c in range(n):
        pivot = next((i for i in range(c, n) if M[i][c] != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            M[c], M[pivot] = M[pivot], M[c]
            result = K.neg(result)
        result = K.mul(result, M[c][c])
        inv = K.inv(M[c][c])
        for i in range(c + 1, n):
            if M[i][c] != 0:
                f = K.mul(M[i][c], inv)
                M[i] = [K.sub(x, K.mul(f, y)) for x, y in zip(M[i], M[c])]
    return result
