"""Weight blocks of multiplication by omega and the kernel characters kappa(d, e).

Basis elements of M_{d,e} are pairs (a, b) standing for z^b / w^(1+a) with
|a| = d, |b| = e. Multiplication by omega = sum z_i w_i sends (a, b) to
sum over i with a_i >= 1 of (a - e_i, b + e_i) and preserves u = a + b.

For a fixed weight u the block M_{d,e-1,u} -> M_{d-1,e,u} is multiplication
by l = y_1 + ... + y_n from degree e-1 to degree e in the box ring
Q_u = k[y]/(y_i^(u_i+1)) (identify (a, b) with y^b). Besides the literal
block, kernel dimensions can be read off the cokernel Q_u / l Q_u, which is
isomorphic to k[y_1..y_{n-1}]/(y_i^(u_i+1), L^(u_n+1)) with L = y_1+...+y_{n-1};
putting the largest u_i last keeps these matrices very small.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numba
import numpy as np

from ..charring import Character
from .linalg import nullspace_mod_p, rank_mod_p


def box_slice(u: tuple[int, ...], s: int) -> list[tuple[int, ...]]:
    """All b with 0 <= b <= u componentwise and |b| = s, in lexicographic order."""
    n = len(u)
    out = []
    if s < 0 or s > sum(u):
        return out

    def rec(prefix, i, left):
        if i == n - 1:
            if left <= u[i]:
                out.append(prefix + (left,))
            return
        rest = sum(u[i + 1:])
        for x in range(max(0, left - rest), min(u[i], left) + 1):
            rec(prefix + (x,), i + 1, left - x)

    rec((), 0, s)
    return out


def partitions_into(total: int, n: int, cap: int | None = None):
    """Weakly decreasing n-tuples of nonnegative integers with the given sum."""
    if cap is None:
        cap = total
    if n == 1:
        if total <= cap:
            yield (total,)
        return
    for first in range(min(total, cap), -1, -1):
        if first * n < total:
            break
        for rest in partitions_into(total - first, n - 1, first):
            yield (first,) + rest


def compositions(total: int, n: int):
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, n - 1):
            yield (first,) + rest


def distinct_permutations(u: tuple[int, ...]) -> set[tuple[int, ...]]:
    return set(itertools.permutations(u))


@dataclass(frozen=True)
class WeightBlock:
    """omega restricted to weight u: M_{d,e,u} -> M_{d-1,e+1,u}.

    ``source`` and ``target`` list the a-vectors of the basis elements (the
    b-vector is u - a). ``entries`` holds (target index, source index) pairs
    whose matrix entry is 1.
    """

    d: int
    e: int
    u: tuple[int, ...]
    p: int
    source: tuple[tuple[int, ...], ...]
    target: tuple[tuple[int, ...], ...]
    entries: tuple[tuple[int, int], ...]

    def matrix(self) -> np.ndarray:
        mat = np.zeros((len(self.target), len(self.source)), dtype=np.int64)
        for r, c in self.entries:
            mat[r, c] = 1
        return mat

    def rank(self) -> int:
        return rank_mod_p(self.matrix(), self.p)

    def kernel_dim(self) -> int:
        return len(self.source) - self.rank()

    def cokernel_dim(self) -> int:
        return len(self.target) - self.rank()


@lru_cache(maxsize=200_000)
def weight_block(d: int, e: int, u: tuple[int, ...], p: int) -> WeightBlock:
    u = tuple(u)
    if sum(u) != d + e:
        raise ValueError(f"|u| = {sum(u)} but d + e = {d + e}")
    if any(x < 0 for x in u):
        raise ValueError("weight must be nonnegative")
    n = len(u)
    source = tuple(tuple(x - y for x, y in zip(u, b)) for b in box_slice(u, e))
    target = tuple(tuple(x - y for x, y in zip(u, b)) for b in box_slice(u, e + 1)) if d >= 1 else ()
    index = {a: i for i, a in enumerate(target)}
    entries = []
    for j, a in enumerate(source):
        for i in range(n):
            if a[i] >= 1:
                t = a[:i] + (a[i] - 1,) + a[i + 1:]
                entries.append((index[t], j))
    return WeightBlock(d, e, u, p, source, target, tuple(entries))


# quotient route ---------------------------------------------------------------

@numba.njit(cache=True)
def _slice_array(box, s):
    m = box.shape[0]
    if m == 0:
        out = np.zeros((1 if s == 0 else 0, 0), dtype=np.int64)
        return out
    total = 1
    for i in range(m - 1):
        total *= box[i] + 1
    tmp = np.zeros((total, m), dtype=np.int64)
    cnt = 0
    cur = np.zeros(m, dtype=np.int64)
    for idx in range(total):
        rem = idx
        acc = 0
        for i in range(m - 1):
            cur[i] = rem % (box[i] + 1)
            rem //= box[i] + 1
            acc += cur[i]
        last = s - acc
        if 0 <= last <= box[m - 1]:
            for i in range(m - 1):
                tmp[cnt, i] = cur[i]
            tmp[cnt, m - 1] = last
            cnt += 1
    return tmp[:cnt]


@numba.njit(cache=True)
def _slice_count(box, s):
    # coefficient of t^s in prod (1 + t + ... + t^box_i)
    if s < 0:
        return 0
    poly = np.zeros(s + 1, dtype=np.int64)
    poly[0] = 1
    for i in range(box.shape[0]):
        new = np.zeros(s + 1, dtype=np.int64)
        run = 0
        for k in range(s + 1):
            run += poly[k]
            if k - box[i] - 1 >= 0:
                run -= poly[k - box[i] - 1]
            new[k] = run
        poly = new
    return poly[s]


@numba.njit(cache=True)
def _multinomial_mod_p(C, gamma, p, fact, invfact):
    # Lucas: zero if adding the parts in base p carries, else product of digit multinomials
    result = 1
    c = C
    g = gamma.copy()
    while c > 0:
        cd = c % p
        s = 0
        val = fact[cd]
        for j in range(g.shape[0]):
            gd = g[j] % p
            s += gd
            val = val * invfact[gd] % p
            g[j] //= p
        if s != cd:
            return 0
        result = result * val % p
        c //= p
    for j in range(g.shape[0]):
        if g[j] != 0:
            return 0
    return result


@numba.njit(cache=True)
def _rank_small(mat, p):
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
        a = mat[r, c]
        inv = 1
        base = a
        ex = p - 2
        while ex > 0:
            if ex & 1:
                inv = inv * base % p
            base = base * base % p
            ex >>= 1
        for i in range(r + 1, rows):
            f = mat[i, c]
            if f != 0:
                f = f * inv % p
                for j in range(c, cols):
                    mat[i, j] = (mat[i, j] - f * mat[r, j]) % p
        r += 1
    return r


@numba.njit(cache=True)
def _quotient_dim(box, C, t, p, fact, invfact):
    """dim of degree t in k[y_1..y_m]/(y_i^(box_i+1), (y_1+...+y_m)^C)."""
    cols = _slice_array(box, t)
    ncols = cols.shape[0]
    if ncols == 0:
        return 0
    if t - C < 0:
        return ncols
    rows = _slice_array(box, t - C)
    nrows = rows.shape[0]
    if nrows == 0:
        return ncols
    m = box.shape[0]
    mat = np.zeros((nrows, ncols), dtype=np.int64)
    gamma = np.zeros(m, dtype=np.int64)
    for i in range(nrows):
        for j in range(ncols):
            ok = True
            for k in range(m):
                g = cols[j, k] - rows[i, k]
                if g < 0:
                    ok = False
                    break
                gamma[k] = g
            if ok:
                mat[i, j] = _multinomial_mod_p(C, gamma, p, fact, invfact)
    if nrows > ncols:
        mat = mat.T.copy()
    return ncols - _rank_small(mat, p)


@lru_cache(maxsize=None)
def _factorials(p: int):
    fact = np.ones(p, dtype=np.int64)
    for i in range(1, p):
        fact[i] = fact[i - 1] * i % p
    invfact = np.array([pow(int(f), p - 2, p) for f in fact], dtype=np.int64)
    return fact, invfact


def kernel_dim_quotient(d: int, e: int, u: tuple[int, ...], p: int) -> int:
    """dim ker(M_{d,e-1,u} -> M_{d-1,e,u}) via the cokernel of l on Q_u."""
    s = sorted(u, reverse=True)
    full = np.array(s, dtype=np.int64)
    src = _slice_count(full, e - 1)
    if src == 0:
        return 0
    tgt = _slice_count(full, e) if d >= 1 else 0
    if d < 1:
        return src
    fact, invfact = _factorials(p)
    coker = _quotient_dim(full[1:].copy(), s[0] + 1, e, p, fact, invfact)
    return src - tgt + coker


def cokernel_dim_quotient(d: int, e: int, u: tuple[int, ...], p: int) -> int:
    """dim coker(M_{d,e-1,u} -> M_{d-1,e,u})."""
    if d < 1:
        return 0
    s = sorted(u, reverse=True)
    full = np.array(s, dtype=np.int64)
    fact, invfact = _factorials(p)
    return int(_quotient_dim(full[1:].copy(), s[0] + 1, e, p, fact, invfact))


def kernel_dim_block(d: int, e: int, u: tuple[int, ...], p: int) -> int:
    if e < 1:
        return 0
    return weight_block(d, e - 1, tuple(u), p).kernel_dim()


def cokernel_dim_block(d: int, e: int, u: tuple[int, ...], p: int) -> int:
    if e < 1 or d < 1:
        return 0
    return weight_block(d, e - 1, tuple(u), p).cokernel_dim()


_KERNEL_METHODS = {"quotient": kernel_dim_quotient, "block": kernel_dim_block}
_COKERNEL_METHODS = {"quotient": cokernel_dim_quotient, "block": cokernel_dim_block}


def _assemble(dims: dict[tuple[int, ...], int], n: int, degree: int, orbits: bool) -> Character:
    terms = {}
    for u, dim in dims.items():
        if dim:
            if orbits:
                for v in distinct_permutations(u):
                    terms[v] = dim
            else:
                terms[u] = dim
    return Character(n, terms, degree=degree)


def kernel_dims(d: int, e: int, p: int, n: int, method: str = "quotient") -> dict[tuple[int, ...], int]:
    """Nonzero kernel dimensions of K(d, e) at dominant (sorted) weights."""
    if e < 1 or d < 0:
        return {}
    fn = _KERNEL_METHODS[method]
    out = {}
    for u in partitions_into(d + e - 1, n):
        k = fn(d, e, u, p)
        if k:
            out[u] = k
    return out


@lru_cache(maxsize=None)
def kappa_oracle(d: int, e: int, p: int, n: int, method: str = "quotient",
                 full: bool = False) -> Character:
    """Character of K(d, e) = ker(M_{d,e-1} -> M_{d-1,e}) over F_p.

    By default only dominant weights are computed and expanded over their
    S_n-orbits. ``full=True`` computes every weight separately, which makes
    the symmetry of the result a genuine check.
    """
    if d < 0 or e < 0:
        raise ValueError("d and e must be nonnegative")
    if e == 0:
        return Character.zero(n)
    degree = d + e - 1
    if full:
        fn = _KERNEL_METHODS[method]
        dims = {u: fn(d, e, u, p) for u in compositions(degree, n)}
        return _assemble(dims, n, degree, orbits=False)
    return _assemble(kernel_dims(d, e, p, n, method), n, degree, orbits=True)


@lru_cache(maxsize=None)
def cokernel_char(d: int, e: int, p: int, n: int, method: str = "block",
                  full: bool = False) -> Character:
    """Character of coker(M_{d,e-1} -> M_{d-1,e}) (the cokernel of mu_{d,e})."""
    if d < 1 or e < 1:
        return Character.zero(n)
    degree = d + e - 1
    fn = _COKERNEL_METHODS[method]
    weights = compositions(degree, n) if full else partitions_into(degree, n)
    dims = {u: fn(d, e, u, p) for u in weights}
    return _assemble(dims, n, degree, orbits=not full)


@dataclass(frozen=True)
class KernelBasis:
    """Echelonized basis of K(d, e)_u; each vector is indexed like ``source``."""

    d: int
    e: int
    u: tuple[int, ...]
    p: int
    source: tuple[tuple[int, ...], ...]
    vectors: np.ndarray

    def as_dicts(self) -> list[dict[tuple[int, ...], int]]:
        out = []
        for row in self.vectors:
            out.append({self.source[j]: int(c) for j, c in enumerate(row) if c})
        return out


@lru_cache(maxsize=100_000)
def _kernel_basis_sorted(d: int, e: int, u: tuple[int, ...], p: int) -> KernelBasis:
    block = weight_block(d, e - 1, u, p)
    if not block.source:
        vecs = np.zeros((0, 0), dtype=np.int64)
    elif not block.target:
        vecs = np.eye(len(block.source), dtype=np.int64)
    else:
        vecs = nullspace_mod_p(block.matrix(), p)
    return KernelBasis(d, e, u, p, block.source, vecs)


def kernel_basis(d: int, e: int, u: tuple[int, ...], p: int) -> KernelBasis:
    """Basis of K(d, e) in weight u.

    Computed once per dominant weight and transported to u by permuting
    coordinates.
    """
    u = tuple(u)
    if e < 1 or sum(u) != d + e - 1:
        return KernelBasis(d, e, u, p, (), np.zeros((0, 0), dtype=np.int64))
    order = sorted(range(len(u)), key=lambda i: -u[i])
    s = tuple(u[i] for i in order)
    base = _kernel_basis_sorted(d, e, s, p)
    if s == u:
        return base
    # position order[k] of u carries coordinate k of the sorted weight
    inv = [0] * len(u)
    for k, i in enumerate(order):
        inv[i] = k
    source = tuple(tuple(a[inv[i]] for i in range(len(u))) for a in base.source)
    return KernelBasis(d, e, u, p, source, base.vectors)
