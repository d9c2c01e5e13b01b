"""Base-p carries, even-carry polynomials and Nim polynomials."""

from __future__ import annotations

from functools import lru_cache, reduce
from operator import xor
from typing import Iterable

from .charring import Character
from .schur import complete


def carry_sequence(a: Iterable[int], p: int) -> tuple[int, ...]:
    """Carries (c_1, c_2, ...) produced when adding the multiset ``a`` in base p.

    c_i = floor(sum / p^i) - sum_j floor(a_j / p^i), trimmed after the last
    nonzero carry.
    """
    if p < 2:
        raise ValueError("base must be at least 2")
    a = list(a)
    if any(x < 0 for x in a):
        raise ValueError("multiset entries must be nonnegative")
    total = sum(a)
    carries = []
    q = p
    while q <= total:
        carries.append(total // q - sum(x // q for x in a))
        q *= p
    while carries and carries[-1] == 0:
        carries.pop()
    return tuple(carries)


def is_even_carry(a: Iterable[int], p: int) -> bool:
    return all(c % 2 == 0 for c in carry_sequence(a, p))


def digits(m: int, p: int) -> list[int]:
    """Base-p digits of m, least significant first (empty for m = 0)."""
    out = []
    while m:
        m, r = divmod(m, p)
        out.append(r)
    return out


@lru_cache(maxsize=None)
def even_carry_poly(m: int, p: int) -> Character:
    """C_p(m) by enumerating triples with a_1 + a_2 + a_3 + 1 = m."""
    if p < 2:
        raise ValueError("base must be at least 2")
    if m <= 0:
        return Character.zero(3)
    terms = {}
    s = m - 1
    for a1 in range(s + 1):
        for a2 in range(s - a1 + 1):
            a3 = s - a1 - a2
            if is_even_carry((a1, a2, a3, 1), p):
                terms[(a1, a2, a3)] = 1
    return Character(3, terms, degree=s)


@lru_cache(maxsize=None)
def even_carry_poly_digits(m: int, p: int) -> Character:
    """C_p(m) from the digit expansion, summing over carry patterns in {0, 2}.

    A column whose outgoing carry is 2 has digit sum d_i + 2p - c_i, which is
    the dual of a complete symmetric function of degree p - 3 - d_i + c_i.
    """
    if m <= 0:
        return Character.zero(3)
    ds = digits(m, p)
    k = len(ds) - 1
    out = Character.zero(3)
    for mask in range(1 << k):
        # carries[i] is the carry into column i; c_0 = 1 accounts for the extra 1
        carries = [1] + [2 if mask >> (i - 1) & 1 else 0 for i in range(1, k + 1)] + [0]
        term = Character.one(3)
        for i in range(k + 1):
            if carries[i + 1] == 0:
                factor = complete(ds[i] - carries[i], 3)
            else:
                factor = complete(p - 3 - ds[i] + carries[i], 3).dual()
            if not factor:
                term = factor
                break
            term = term * factor.frobenius(i, p)
        out = out + term
    return out


@lru_cache(maxsize=None)
def nim_poly(n: int, m: int) -> Character:
    """N_n(m): sum of x^a over n-tuples with sum 2m and zero Nim sum."""
    if m < 0:
        return Character.zero(n)
    total = 2 * m
    terms = {}

    def rec(prefix: tuple[int, ...], left: int):
        if len(prefix) == n - 1:
            t = prefix + (left,)
            if reduce(xor, t, 0) == 0:
                terms[t] = 1
            return
        for a in range(left + 1):
            rec(prefix + (a,), left - a)

    rec((), total)
    return Character(n, terms, degree=total)
