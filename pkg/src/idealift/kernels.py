"""Exact Gaussian-elimination kernels over F_p.

These are the hot inner loops of the package: every distance, rank
distribution, canonical subspace basis and theorem sweep reduces to ranks
or reduced row echelon forms of small integer matrices mod p. Inputs are
int64 arrays with entries in [0, p); p stays below 2**15 so all int64
intermediates are exact. Pivot inverses come from Fermat / table lookup,
never from floating point.

Two interchangeable builds are provided (see :mod:`idealift.backend`):
``@njit`` loops for the numba backend and batch-vectorised numpy for the
fallback. ``rank_mod_many`` is the workhorse; callers stack their
matrices into one (N, k, l) array and make a single call.
"""

from __future__ import annotations

import numpy as np

from .backend import BACKEND, HAS_NUMBA


def _inverse_table(p: int) -> np.ndarray:
    """Multiplicative inverses mod p; index 0 is unused."""
    table = np.zeros(p, dtype=np.int64)
    for value in range(1, p):
        table[value] = pow(value, -1, p)
    return table


# ---------------------------------------------------------------------------
# pure-numpy build
# ---------------------------------------------------------------------------

def _rank_many_numpy(mats: np.ndarray, p: int) -> np.ndarray:
    """Forward elimination run in lockstep across the whole batch."""
    a = mats.astype(np.int64) % p
    n, k, l = a.shape
    if n == 0 or k == 0 or l == 0:
        return np.zeros(n, dtype=np.int64)
    inv = _inverse_table(p)
    rank = np.zeros(n, dtype=np.int64)
    rows = np.arange(k)
    for col in range(l):
        # candidate pivot rows: at or below the current frontier, nonzero here
        cand = (a[:, :, col] != 0) & (rows[None, :] >= rank[:, None])
        has = cand.any(axis=1)
        idx = np.nonzero(has)[0]
        if idx.size == 0:
            continue
        piv = cand[idx].argmax(axis=1)
        r = rank[idx]
        swap = a[idx, r].copy()
        a[idx, r] = a[idx, piv]
        a[idx, piv] = swap
        pivot_row = (a[idx, r] * inv[a[idx, r, col]][:, None]) % p
        a[idx, r] = pivot_row
        sub = a[idx]
        factors = sub[:, :, col].copy()
        factors[rows[None, :] <= r[:, None]] = 0  # settled rows stay put
        a[idx] = (sub - factors[:, :, None] * pivot_row[:, None, :]) % p
        rank[idx] += 1
    return rank


def _rref_numpy(mat: np.ndarray, p: int) -> tuple[np.ndarray, int]:
    a = mat.astype(np.int64) % p
    k, l = a.shape
    if k == 0 or l == 0:
        return a, 0
    inv = _inverse_table(p)
    r = 0
    for col in range(l):
        piv = -1
        for row in range(r, k):
            if a[row, col] != 0:
                piv = row
                break
        if piv < 0:
            continue
        a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * inv[a[r, col]]) % p
        others = a[:, col] != 0
        others[r] = False
        a[others] = (a[others] - np.outer(a[others, col], a[r])) % p
        r += 1
        if r == k:
            break
    return a, r


# ---------------------------------------------------------------------------
# numba build
# ---------------------------------------------------------------------------

if HAS_NUMBA:
    from numba import njit

    @njit(cache=True)
    def _inv_mod(value, p):
        # p is tiny here; a scan beats carrying an euclid implementation
        for t in range(1, p):
            if (value * t) % p == 1:
                return t
        return 0

    @njit(cache=True)
    def _rank_many_numba(mats, p):
        n, k, l = mats.shape
        out = np.empty(n, dtype=np.int64)
        for m in range(n):
            a = mats[m] % p
            r = 0
            for col in range(l):
                piv = -1
                for row in range(r, k):
                    if a[row, col] != 0:
                        piv = row
                        break
                if piv < 0:
                    continue
                for j in range(l):
                    tmp = a[r, j]
                    a[r, j] = a[piv, j]
                    a[piv, j] = tmp
                inv = _inv_mod(a[r, col], p)
                for j in range(l):
                    a[r, j] = (a[r, j] * inv) % p
                for row in range(r + 1, k):
                    f = a[row, col]
                    if f != 0:
                        for j in range(l):
                            a[row, j] = (a[row, j] - f * a[r, j]) % p
                r += 1
                if r == k:
                    break
            out[m] = r
        return out

    @njit(cache=True)
    def _rref_numba(mat, p):
        a = mat % p
        k, l = a.shape
        r = 0
        for col in range(l):
            piv = -1
            for row in range(r, k):
                if a[row, col] != 0:
                    piv = row
                    break
            if piv < 0:
                continue
            for j in range(l):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
            inv = _inv_mod(a[r, col], p)
            for j in range(l):
                a[r, j] = (a[r, j] * inv) % p
            for row in range(k):
                if row == r:
                    continue
                f = a[row, col]
                if f != 0:
                    for j in range(l):
                        a[row, j] = (a[row, j] - f * a[r, j]) % p
            r += 1
            if r == k:
                break
        return a, r


# ---------------------------------------------------------------------------
# public dispatch
# ---------------------------------------------------------------------------

def rank_mod_many(mats: np.ndarray, p: int) -> np.ndarray:
    """Ranks over F_p of a batch of matrices, shape (N, k, l) -> (N,)."""
    mats = np.ascontiguousarray(mats, dtype=np.int64)
    if mats.ndim != 3:
        raise ValueError("expected a batch of matrices with shape (N, k, l)")
    if mats.shape[0] == 0 or mats.shape[1] == 0 or mats.shape[2] == 0:
        return np.zeros(mats.shape[0], dtype=np.int64)
    if HAS_NUMBA:
        return _rank_many_numba(mats, p)
    return _rank_many_numpy(mats, p)


def rank_mod(mat: np.ndarray, p: int) -> int:
    """Rank of one matrix over F_p."""
    mat = np.ascontiguousarray(mat, dtype=np.int64)
    if mat.ndim != 2:
        raise ValueError("expected a single matrix with shape (k, l)")
    return int(rank_mod_many(mat[None, :, :], p)[0])


def rref_mod(mat: np.ndarray, p: int) -> tuple[np.ndarray, int]:
    """Reduced row echelon form over F_p.

    Returns ``(R, r)`` where R has the same shape as the input, its first
    r rows are the canonical RREF rows (unit pivots, strictly increasing
    pivot columns, pivot columns elementary) and the remaining rows are
    zero. The RREF of a matrix depends only on its row space, so R[:r] is
    a canonical basis of that row space.
    """
    mat = np.ascontiguousarray(mat, dtype=np.int64)
    if mat.ndim != 2:
        raise ValueError("expected a single matrix with shape (k, l)")
    if mat.shape[0] == 0 or mat.shape[1] == 0:
        return mat % p, 0
    if HAS_NUMBA:
        reduced, r = _rref_numba(mat, p)
    else:
        reduced, r = _rref_numpy(mat, p)
    return reduced, int(r)


__all__ = ["BACKEND", "HAS_NUMBA", "rank_mod", "rank_mod_many", "rref_mod"]
