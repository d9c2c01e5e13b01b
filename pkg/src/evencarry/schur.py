"""Schur functions, truncated symmetric/Schur functions and minimal Schur functions."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .charring import Character, Exponent


def is_prime_power(q: int, p: int) -> bool:
    if q < 1 or p < 2:
        return False
    while q % p == 0:
        q //= p
    return q == 1


def _log_p(q: int, p: int) -> int:
    if not is_prime_power(q, p):
        raise ValueError(f"{q} is not a power of {p}")
    r = 0
    while q > 1:
        q //= p
        r += 1
    return r


@lru_cache(maxsize=None)
def _schur_poly(lam: tuple[int, ...]) -> dict[Exponent, int]:
    # Gelfand-Tsetlin branching: lam is a partition with exactly n >= 1 entries
    n = len(lam)
    if n == 1:
        return {lam: 1}
    total = sum(lam)
    out: dict[Exponent, int] = {}
    ranges = [range(lam[i + 1], lam[i] + 1) for i in range(n - 1)]
    for mu in _product(ranges):
        last = total - sum(mu)
        for e, c in _schur_poly(mu).items():
            key = e + (last,)
            out[key] = out.get(key, 0) + c
    return out


def _product(ranges):
    if not ranges:
        yield ()
        return
    for head in ranges[0]:
        for tail in _product(ranges[1:]):
            yield (head,) + tail


def _pad(lam: Sequence[int], n: int) -> tuple[int, ...]:
    lam = tuple(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than n = {n} parts")
    return lam + (0,) * (n - len(lam))


@lru_cache(maxsize=None)
def _schur_cached(lam: tuple[int, ...], n: int) -> Character:
    full = _pad(lam, n)
    if any(full[i] < full[i + 1] for i in range(n - 1)):
        return Character.zero(n)
    shift = full[-1]
    base = tuple(x - shift for x in full)
    return Character(n, _schur_poly(base), degree=sum(full) if shift >= 0 else None)


def schur(lam: Sequence[int], n: int) -> Character:
    """s_lam for an integer sequence of length <= n (zero-padded).

    Returns 0 when the padded sequence is not weakly decreasing; negative
    entries are handled by shifting every entry by a constant.
    """
    lam = tuple(int(x) for x in lam)
    # trailing zeros never matter and keep the cache small
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    return _schur_cached(lam, n)


def complete(d: int, n: int) -> Character:
    """h_d = s_(d); zero for negative d."""
    if d < 0:
        return Character.zero(n)
    return schur((d,), n)


def elementary(i: int, n: int) -> Character:
    """e_i = s_(1^i); zero outside 0 <= i <= n."""
    if i < 0 or i > n:
        return Character.zero(n)
    return schur((1,) * i, n)


@lru_cache(maxsize=None)
def _trunc_sym_cached(d: int, q: int, n: int) -> Character:
    # n-fold convolution of the digit polynomial 1 + t + ... + t^(q-1)
    layer: dict[tuple[int, ...], int] = {(): 1}
    for j in range(n):
        remaining = n - j - 1
        nxt = {}
        for e, c in layer.items():
            s = sum(e)
            lo = max(0, d - s - remaining * (q - 1))
            hi = min(q - 1, d - s)
            for a in range(lo, hi + 1):
                nxt[e + (a,)] = c
        layer = nxt
    return Character(n, layer, degree=d)


def trunc_sym(d: int, q: int, n: int, p: int | None = None) -> Character:
    """s_d^(q): sum of x^a with |a| = d and every a_i < q."""
    if p is not None:
        _log_p(q, p)
    if d < 0 or d > n * (q - 1):
        return Character.zero(n)
    return _trunc_sym_cached(d, q, n)


def trunc_sym_via_resolution(d: int, q: int, n: int, p: int) -> Character:
    """s_d^(q) as the alternating sum over the Koszul-type resolution:
    sum_i (-1)^i F^r(e_i) * h_(d - i q)."""
    r = _log_p(q, p)
    out = Character.zero(n)
    for i in range(n + 1):
        h = complete(d - i * q, n)
        if not h:
            continue
        term = elementary(i, n).frobenius(r, p) * h
        out = out + (term if i % 2 == 0 else -term)
    return out


def trunc_schur2(a: int, b: int, q: int, n: int, p: int | None = None) -> Character:
    """Two-row truncated Schur function s^(q)_{a,b} = s_a s_b - s_{a+1} s_{b-1}."""
    return (trunc_sym(a, q, n, p) * trunc_sym(b, q, n, p)
            - trunc_sym(a + 1, q, n, p) * trunc_sym(b - 1, q, n, p))


def ms(rows: Sequence[Sequence[int]], p: int) -> Character:
    """Minimal Schur function of a digit matrix.

    ``rows`` lists the n rows as printed: the leftmost entry of each row is
    the most significant base-p digit, the rightmost is the units digit.
    Columns that are not weakly decreasing make the whole product zero.
    """
    rows = [list(r) for r in rows]
    n = len(rows)
    if n == 0:
        raise ValueError("digit matrix needs at least one row")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("digit matrix rows have different lengths")
    for r in rows:
        for x in r:
            if not 0 <= x <= p - 1:
                raise ValueError(f"entry {x} is not a base-{p} digit")
    out = Character.one(n)
    for i in range(width):
        col = [rows[j][width - 1 - i] for j in range(n)]
        if any(col[j] < col[j + 1] for j in range(n - 1)):
            return Character.zero(n)
        out = out * schur(col, n).frobenius(i, p)
    return out


def ms_highest_weight(rows: Sequence[Sequence[int]], p: int) -> tuple[int, ...]:
    """Rows of the digit matrix read as base-p numbers."""
    out = []
    for r in rows:
        v = 0
        for x in r:
            v = v * p + x
        out.append(v)
    return tuple(out)
