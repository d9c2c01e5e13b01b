"""Dense Gaussian elimination over F_p, compiled with numba."""

from __future__ import annotations

import numba
import numpy as np


@numba.njit(cache=True)
def _inv_mod(a, p):
    # Fermat inverse, p prime
    result = 1
    base = a % p
    e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


@numba.njit(cache=True)
def rref_inplace(mat, p):
    """Reduce ``mat`` (int64, entries in [0, p)) to reduced row echelon form.

    Returns the array of pivot columns; its length is the rank.
    """
    rows, cols = mat.shape
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if mat[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = mat[r, j]
                mat[r, j] = mat[piv, j]
                mat[piv, j] = tmp
        inv = _inv_mod(mat[r, c], p)
        if inv != 1:
            for j in range(c, cols):
                mat[r, j] = mat[r, j] * inv % p
        for i in range(rows):
            if i != r:
                f = mat[i, c]
                if f != 0:
                    for j in range(c, cols):
                        mat[i, j] = (mat[i, j] - f * mat[r, j]) % p
        pivots[r] = c
        r += 1
    return pivots[:r]


@numba.njit(cache=True)
def rank_inplace(mat, p):
    """Rank over F_p; destroys ``mat``. Row reduction only below the pivot."""
    rows, cols = mat.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if mat[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                tmp = mat[r, j]
                mat[r, j] = mat[piv, j]
                mat[piv, j] = tmp
        inv = _inv_mod(mat[r, c], p)
        for i in range(r + 1, rows):
            f = mat[i, c]
            if f != 0:
                f = f * inv % p
                for j in range(c, cols):
                    mat[i, j] = (mat[i, j] - f * mat[r, j]) % p
        r += 1
    return r


def rank_mod_p(mat: np.ndarray, p: int) -> int:
    if mat.size == 0:
        return 0
    work = np.ascontiguousarray(mat, dtype=np.int64) % p
    # eliminate along the shorter side
    if work.shape[0] > work.shape[1]:
        work = np.ascontiguousarray(work.T)
    return int(rank_inplace(work, p))


def nullspace_mod_p(mat: np.ndarray, p: int) -> np.ndarray:
    """Basis of {v : mat @ v = 0 mod p}, one vector per row, echelonized."""
    rows, cols = mat.shape
    if cols == 0:
        return np.zeros((0, 0), dtype=np.int64)
    work = np.ascontiguousarray(mat, dtype=np.int64) % p
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    pivots = rref_inplace(work, p)
    pivset = set(pivots.tolist())
    free = [c for c in range(cols) if c not in pivset]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for r, c in enumerate(pivots.tolist()):
            basis[k, c] = (-work[r, f]) % p
    return basis


class Echelon:
    """Incrementally grown row space over F_p, kept fully reduced."""

    def __init__(self, length: int, p: int):
        self.p = p
        self.length = length
        self.rows = np.zeros((0, length), dtype=np.int64)
        self.pivots = np.zeros(0, dtype=np.int64)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, vec: np.ndarray) -> bool:
        """Insert ``vec``; return True if it enlarged the span."""
        v = np.asarray(vec, dtype=np.int64) % self.p
        piv = _reduce_and_pivot(self.rows, self.pivots, v, self.p)
        if piv < 0:
            return False
        self.rows, self.pivots = _insert_row(self.rows, self.pivots, v, piv, self.p)
        return True


@numba.njit(cache=True)
def _reduce_and_pivot(rows, pivots, v, p):
    for k in range(pivots.shape[0]):
        c = v[pivots[k]]
        if c != 0:
            for j in range(v.shape[0]):
                v[j] = (v[j] - c * rows[k, j]) % p
    for j in range(v.shape[0]):
        if v[j] != 0:
            return j
    return -1


@numba.njit(cache=True)
def _insert_row(rows, pivots, v, piv, p):
    inv = _inv_mod(v[piv], p)
    for j in range(v.shape[0]):
        v[j] = v[j] * inv % p
    # clear the new pivot column from existing rows
    for k in range(rows.shape[0]):
        c = rows[k, piv]
        if c != 0:
            for j in range(v.shape[0]):
                rows[k, j] = (rows[k, j] - c * v[j]) % p
    m = rows.shape[0]
    new_rows = np.empty((m + 1, v.shape[0]), dtype=np.int64)
    new_rows[:m] = rows
    new_rows[m] = v
    new_piv = np.empty(m + 1, dtype=np.int64)
    new_piv[:m] = pivots
    new_piv[m] = piv
    return new_rows, new_piv
