"""Primitive cohomology: K(m-1, m) modulo the R-span of Frobenius images.

An element of M_{d,e-1} is a dict {a: c} over basis elements (a, b) with
b = u - a, standing for z^b / w^(1+a). The R-action is z_i: b -> b + e_i and
w_i: a -> a - e_i, where anything with a negative a_i is zero. The Frobenius
cycle map is F_K(v) = omega^(p-1) F(v) with F(a, b) = (p a + (p-1), p b);
it sends K(d, e) to K(p d + (p-1)(n-1), p e).
"""

from __future__ import annotations

import itertools
import math
import warnings
from functools import lru_cache
from typing import Iterator

import numpy as np

from ..charring import Character
from .blocks import (compositions, distinct_permutations, kernel_basis, kappa_oracle,
                     kernel_dims, weight_block)
from .linalg import Echelon

Vector = dict[tuple[int, ...], int]          # a -> coefficient, weight implicit
Element = dict[tuple[tuple[int, ...], tuple[int, ...]], int]  # (a, b) -> coefficient


@lru_cache(maxsize=None)
def _omega_power_terms(n: int, p: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    # omega^(p-1) = sum over |g| = p-1 of multinomial(g) z^g w^g
    out = []
    for g in compositions(p - 1, n):
        c = math.factorial(p - 1)
        for x in g:
            c //= math.factorial(x)
        if c % p:
            out.append((g, c % p))
    return tuple(out)


def omega_apply(v: Element, p: int) -> Element:
    """Multiply by omega = sum z_i w_i."""
    out: Element = {}
    for (a, b), c in v.items():
        for i, x in enumerate(a):
            if x >= 1:
                key = (a[:i] + (x - 1,) + a[i + 1:], b[:i] + (b[i] + 1,) + b[i + 1:])
                out[key] = (out.get(key, 0) + c) % p
    return {k: c for k, c in out.items() if c}


def element_bidegree(v: Element) -> tuple[int, int] | None:
    """(d, e) with v in M_{d, e-1}, or None for the zero element."""
    degs = {(sum(a), sum(b) + 1) for a, b in v}
    if not degs:
        return None
    if len(degs) > 1:
        raise ValueError("element is not bihomogeneous")
    return degs.pop()


def check_in_kernel(v: Element, p: int) -> bool:
    """True if omega kills v."""
    return not omega_apply(v, p)


def frobenius_cycle(v: Element, p: int, n: int) -> Element:
    """F_K(v) = omega^(p-1) F(v) for v in K(d, e); the result lies in
    K(p d + (p-1)(n-1), p e)."""
    v = {k: c % p for k, c in v.items() if c % p}
    if not check_in_kernel(v, p):
        raise ValueError("frobenius_cycle needs an element of ker(omega)")
    out = {(tuple(p * x + p - 1 for x in a), tuple(p * y for y in b)): c
           for (a, b), c in v.items()}
    for _ in range(p - 1):
        out = omega_apply(out, p)
    return out


def monomial_mult(v: Element, alpha: tuple[int, ...], beta: tuple[int, ...], p: int) -> Element:
    """Multiply by w^alpha z^beta; terms with a negative w-exponent shift vanish."""
    out: Element = {}
    for (a, b), c in v.items():
        t = tuple(x - y for x, y in zip(a, alpha))
        if min(t) < 0:
            continue
        key = (t, tuple(x + y for x, y in zip(b, beta)))
        out[key] = (out.get(key, 0) + c) % p
    return {k: c for k, c in out.items() if c}


def basis_elements(basis) -> list[Element]:
    """KernelBasis rows as explicit (a, b) elements."""
    out = []
    for row in basis.vectors:
        el = {}
        for j, c in enumerate(row):
            if c:
                a = basis.source[j]
                el[(a, tuple(x - y for x, y in zip(basis.u, a)))] = int(c)
        out.append(el)
    return out


def _residue_pairs(u: tuple[int, ...], p: int) -> list[list[tuple[int, int]]]:
    # per coordinate: (alpha_i, beta_i) in [0, p-1]^2 with beta_i - alpha_i = u_i + 1 mod p
    out = []
    for x in u:
        want = (x + 1) % p
        out.append([(al, be) for al in range(p) for be in range(p) if (be - al) % p == want])
    return out


def _candidates(d: int, e: int, u: tuple[int, ...], p: int, n: int) -> Iterator[tuple]:
    """Source data (d', e', u', alpha) for generators z^beta w^alpha F_K(K(d', e')_{u'})."""
    for combo in itertools.product(*_residue_pairs(u, p)):
        alpha = tuple(al for al, _ in combo)
        beta = tuple(be for _, be in combo)
        num = tuple(x - (p - 1) - be + al for x, (al, be) in zip(u, combo))
        if min(num) < 0:
            continue
        src_u = tuple(x // p for x in num)
        # target bidegree: p e' + |beta| = e and p d' + (p-1)(n-1) - |alpha| = d
        e_num = e - sum(beta)
        d_num = d + sum(alpha) - (p - 1) * (n - 1)
        if e_num < p or e_num % p or d_num < 0 or d_num % p:
            continue
        src_d, src_e = d_num // p, e_num // p
        if sum(src_u) != src_d + src_e - 1:
            continue
        yield src_d, src_e, src_u, alpha


def image_vectors(d: int, e: int, u: tuple[int, ...], p: int) -> Iterator[Vector]:
    """All generators z^beta w^alpha F_K(w) landing in K(d, e)_u, with alpha, beta < p,
    as a-indexed vectors (b = u - a).

    Larger exponents are redundant: z_i^p F_K(w) = F_K(z_i w) and likewise for w_i.
    This is the hot loop, so F, omega^(p-1) and w^alpha are fused.
    """
    n = len(u)
    omega_terms = _omega_power_terms(n, p)
    for src_d, src_e, src_u, alpha in _candidates(d, e, u, p, n):
        basis = kernel_basis(src_d, src_e, src_u, p)
        if basis.vectors.shape[0] == 0:
            continue
        for row in basis.vectors:
            out: Vector = {}
            for j, c in enumerate(row):
                if not c:
                    continue
                a = basis.source[j]
                for g, mc in omega_terms:
                    t = tuple(p * x + p - 1 - gi - al for x, gi, al in zip(a, g, alpha))
                    if min(t) >= 0:
                        out[t] = (out.get(t, 0) + int(c) * mc) % p
            out = {a: c for a, c in out.items() if c}
            if out:
                yield out


def linear_image_vectors(d: int, e: int, u: tuple[int, ...], p: int) -> Iterator[Vector]:
    """z_i K(d, e-1) and w_i K(d+1, e), landing in K(d, e)_u."""
    n = len(u)
    for i in range(n):
        if u[i] >= 1:
            src = u[:i] + (u[i] - 1,) + u[i + 1:]
            basis = kernel_basis(d, e - 1, src, p)
            for row in basis.vectors:
                # z_i keeps a and raises b_i
                vec = {basis.source[j]: int(c) for j, c in enumerate(row) if c}
                if vec:
                    yield vec
        src = u[:i] + (u[i] + 1,) + u[i + 1:]
        basis = kernel_basis(d + 1, e, src, p)
        for row in basis.vectors:
            vec = {}
            for j, c in enumerate(row):
                a = basis.source[j]
                if c and a[i] >= 1:
                    vec[a[:i] + (a[i] - 1,) + a[i + 1:]] = int(c)
            if vec:
                yield vec


SPANS = ("frobenius", "minimal")


def prim_dim(d: int, e: int, u: tuple[int, ...], p: int, kappa_u: int | None = None,
             span: str = "minimal") -> int:
    """dim K^prim(d, e)_u = dim K(d, e)_u minus the rank of the decomposable part.

    ``span="frobenius"`` quotients by R F_K(K) only. ``span="minimal"`` also
    quotients by R_+ K, leaving the minimal generators of K under R and F_K.
    """
    if span not in SPANS:
        raise ValueError(f"unknown span {span!r}")
    block = weight_block(d, e - 1, tuple(u), p)
    if kappa_u is None:
        kappa_u = block.kernel_dim()
    if kappa_u == 0:
        return 0
    index = {a: i for i, a in enumerate(block.source)}
    ech = Echelon(len(block.source), p)
    gens = image_vectors(d, e, tuple(u), p)
    if span == "minimal":
        gens = itertools.chain(linear_image_vectors(d, e, tuple(u), p), gens)
    for vec in gens:
        arr = np.zeros(len(block.source), dtype=np.int64)
        for a, c in vec.items():
            arr[index[a]] = c
        ech.add(arr)
        if ech.rank == kappa_u:
            return 0
    if ech.rank > kappa_u:
        raise AssertionError("Frobenius images span more than the kernel")
    return kappa_u - ech.rank


@lru_cache(maxsize=None)
def prim_char(d: int, e: int, p: int, n: int, span: str = "minimal") -> Character:
    """Character of K^prim(d, e), computed at dominant weights.

    The generators z^beta w^alpha F_K(w) with alpha, beta < p come from
    sources with p d' <= d + p - 1, so the enumeration is finite and exact.
    """
    if e < 1:
        return Character.zero(n)
    terms = {}
    for u, k in kernel_dims(d, e, p, n).items():
        dim = prim_dim(d, e, u, p, k, span)
        if dim:
            for v in distinct_permutations(u):
                terms[v] = dim
    return Character(n, terms, degree=d + e - 1)


def prim_poly(m: int, p: int, n: int, span: str = "minimal") -> Character:
    """Prim(m), the character of K^prim(m-1, m)."""
    if m < 1:
        raise ValueError("Prim(m) is defined for m >= 1")
    return prim_char(m - 1, m, p, n, span)


def vanishing_scan(max_total: int, p: int, n: int, span: str = "minimal") -> list[tuple[int, int, Character]]:
    """All (d, e) with d + e <= max_total, d != e - 1 and K^prim(d, e) != 0."""
    found = []
    for total in range(1, max_total + 1):
        for e in range(1, total + 1):
            d = total - e
            if d == e - 1:
                continue
            if not kappa_oracle(d, e, p, n):
                continue
            ch = prim_char(d, e, p, n, span)
            if ch:
                warnings.warn(f"K^prim({d},{e}) is nonzero for p={p}, n={n}")
                found.append((d, e, ch))
    return found
