"""Dense linear algebra over prime fields GF(p) on numpy integer matrices.

All routines take matrices of plain integers and a prime modulus and
reduce entries mod p themselves.  batch_ranks vectorizes Gaussian
elimination across a whole batch of small matrices at once; it is the
workhorse of the exhaustive column-subset scans.
"""

from __future__ import annotations

import numpy as np


def inverse_table(p: int) -> np.ndarray:
    """Multiplicative inverses mod p, with inv[0] = 0 as a harmless filler."""
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, -1, p)
    return inv


def rref(mat, p: int):
    """Reduced row echelon form over GF(p).

    Returns (rref_matrix, rank, pivot_columns).  The input is copied,
    never mutated.
    """
    a = np.array(mat, dtype=np.int64) % p
    n_rows, n_cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a, r, pivots


def rank(mat, p: int) -> int:
    return rref(mat, p)[1]


def kernel_basis(mat, p: int) -> np.ndarray:
    """Basis of the right kernel of mat over GF(p), one basis vector per row.

    Basis vectors are ordered by ascending free column, which makes the
    first vector a deterministic canonical choice.
    """
    a, _, pivots = rref(mat, p)
    n_cols = a.shape[1]
    pivot_set = set(pivots)
    free = [c for c in range(n_cols) if c not in pivot_set]
    basis = np.zeros((len(free), n_cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, c in enumerate(pivots):
            basis[i, c] = (-a[row, f]) % p
    return basis


def solve(mat, rhs, p: int) -> np.ndarray:
    """Unique solution of mat @ x = rhs over GF(p).

    Raises ValueError when the system is inconsistent or has a
    non-trivial solution space.
    """
    a = np.array(mat, dtype=np.int64) % p
    b = np.array(rhs, dtype=np.int64).reshape(-1, 1) % p
    aug, _, pivots = rref(np.hstack([a, b]), p)
    n = a.shape[1]
    if n in pivots:
        raise ValueError("inconsistent linear system")
    if len(pivots) < n:
        raise ValueError("singular linear system")
    x = np.zeros(n, dtype=np.int64)
    for row, c in enumerate(pivots):
        x[c] = aug[row, n]
    return x


def invert(mat, p: int) -> np.ndarray:
    """Inverse of a square matrix over GF(p); ValueError if singular."""
    a = np.array(mat, dtype=np.int64) % p
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    aug, _, pivots = rref(np.hstack([a, np.eye(n, dtype=np.int64)]), p)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular over GF(%d)" % p)
    return aug[:, n:]


def batch_ranks(slices: np.ndarray, p: int, inv_t: np.ndarray | None = None) -> np.ndarray:
    """Ranks over GF(p) of a batch of small matrices, shape (B, rows, cols).

    Eliminates column by column; per elimination step the pivot row is
    chosen independently for every batch element, so the loop count is
    the (small) column count regardless of batch size.
    """
    m = np.ascontiguousarray(slices, dtype=np.int32) % p
    n_batch, n_rows, n_cols = m.shape
    if inv_t is None:
        inv_t = inverse_table(p)
    ranks = np.zeros(n_batch, dtype=np.int64)
    row_idx = np.arange(n_rows, dtype=np.int64)
    for col in range(n_cols):
        nz = (m[:, :, col] != 0) & (row_idx[None, :] >= ranks[:, None])
        has = nz.any(axis=1)
        if not has.any():
            continue
        b = np.nonzero(has)[0]
        mb = m[b]
        bi = np.arange(b.size)
        pr = nz[b].argmax(axis=1)
        tr = ranks[b]
        pivot_rows = mb[bi, pr, :].copy()
        mb[bi, pr, :] = mb[bi, tr, :]
        mb[bi, tr, :] = pivot_rows
        lead = mb[bi, tr, col]
        mb[bi, tr, :] = (mb[bi, tr, :] * inv_t[lead][:, None]) % p
        piv = mb[bi, tr, :].copy()
        factors = mb[:, :, col]
        mb = (mb - factors[:, :, None] * piv[:, None, :]) % p
        mb[bi, tr, :] = piv
        m[b] = mb
        ranks[b] += 1
        if (ranks == n_cols).all():
            break
    return ranks
