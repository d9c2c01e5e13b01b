"""Closed-form and recursive formulas for kappa(d, e)."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .carrycomb import even_carry_poly, nim_poly
from .charring import Character
from .schur import complete, elementary, schur, trunc_schur2


def _t_and_k(e: int, p: int) -> tuple[int, int]:
    """The digit t and exponent k with t p^k <= e < (t+1) p^k."""
    k = 0
    while p ** (k + 1) <= e:
        k += 1
    return e // p ** k, k


def kappa_char0(d: int, e: int, n: int) -> Character:
    """Characteristic zero: s_(e-1, d) when d < e, else 0."""
    if d < 0 or e < 0:
        raise ValueError("d and e must be nonnegative")
    if d >= e:
        return Character.zero(n)
    return schur((e - 1, d), n)


def kappa_known_small_e(d: int, e: int, p: int, n: int) -> Character | None:
    """The cases e < p and p <= e < 2p <= ... with d >= e; None elsewhere."""
    if e < 1:
        return None
    if e < p:
        return schur((e - 1, d), n)
    if e < 2 * p and d >= e:
        return trunc_schur2(d - 1 + p, e - p, p, n)
    return None


def recurrence_middle_term(d: int, e: int, p: int) -> Character:
    """The truncated Schur factor of the recurrence, as an ordinary Schur function."""
    t, k = _t_and_k(e, p)
    q = p ** k
    return schur((q + e - d - 2, (t + 1) * q - d - 2), 3)


@lru_cache(maxsize=None)
def kappa_recurrence(d: int, e: int, p: int) -> Character:
    """kappa(d, e) for n = 3 and d >= e > 0 by the three-term recurrence."""
    if e <= 0 and d >= e:
        # only reached from inner recursive calls
        return Character.zero(3)
    if d < e:
        raise ValueError(f"recurrence needs d >= e > 0, got d={d}, e={e}")
    if e < p:
        return Character.zero(3)
    t, k = _t_and_k(e, p)
    q = p ** k
    if d >= (t + 1) * q - 1:
        return Character.zero(3)
    out = complete(t, 3).dual().frobenius(k, p) * kappa_recurrence(d - t * q, e - t * q, p)
    out = out + complete(t - 1, 3).dual().frobenius(k, p) * recurrence_middle_term(d, e, p)
    if t >= 2:
        inner = kappa_recurrence((t + 1) * q - e - 2, (t + 1) * q - d - 2, p)
        out = out + complete(t - 2, 3).dual().frobenius(k, p) * inner.dual()
    return out


@lru_cache(maxsize=None)
def kappa_even_carry(d: int, e: int, p: int) -> Character:
    """kappa(d, e) for n = 3, d >= e > 0, as a sum over even-carry polynomials."""
    if e < 1 or d < e:
        raise ValueError(f"closed form needs d >= e > 0, got d={d}, e={e}")
    out = Character.zero(3)
    i = 1
    while p ** i <= e:
        q = p ** i
        s = schur((q + e - d - 2, q + q * (e // q) - d - 2), 3)
        if s:
            out = out + even_carry_poly(e // q, p).dual().frobenius(i, p) * s
        i += 1
    return out


def _bit(x: int, i: int) -> int:
    return x >> i & 1


def nim_index_set(d: int, e: int) -> tuple[int, list[int]]:
    """Dyadic exponent k and the index set of the p = 2 Nim formula."""
    if not 2 <= e <= d:
        raise ValueError("Nim formula needs 2 <= e <= d")
    k = e.bit_length() - 1
    if d >= 1 << (k + 1):
        raise ValueError(f"d={d}, e={e} do not share a dyadic window")
    index = []
    for i in range(1, k + 1):
        # left truncation drops digits 0..i; right truncation keeps digits below i
        if (_bit(d, i) and _bit(e, i) and d >> (i + 1) == e >> (i + 1)
                and d % (1 << i) <= (1 << i) - 2):
            index.append(i)
    return k, index


def kappa_nim_p2(d: int, e: int) -> Character:
    """kappa(d, e) for n = 3, p = 2 in the window 2^k <= e <= d < 2^(k+1)."""
    _, index = nim_index_set(d, e)
    out = Character.zero(3)
    for i in index:
        q = 1 << i
        twist = nim_poly(3, e >> (i + 1)).frobenius(i + 1, 2)
        out = out + twist * trunc_schur2(d % q - 1 + 2 * q, e % q, q, 3)
    return out


@dataclass(frozen=True)
class GaoReading:
    """How to read the truncated factor T_q of Gao's p = 2 formula.

    ``order`` is "literal" for T_q(e - 2^(k+1) m, d - 2^(k+1) m) as printed,
    or "swapped" for T_q(d - ..., e - ...). ``shift`` chooses the first
    index of s^(q): "minus" gives X - 1 - q as printed, "plus" gives X - 1 + q.
    """

    order: str = "swapped"
    shift: str = "plus"

    def __post_init__(self):
        if self.order not in ("literal", "swapped"):
            raise ValueError(f"unknown argument order {self.order!r}")
        if self.shift not in ("minus", "plus"):
            raise ValueError(f"unknown shift {self.shift!r}")


LITERAL_GAO = GaoReading("literal", "minus")


def gao_T(q: int, x: int, y: int, n: int, shift: str = "plus") -> Character:
    """T_q(x, y): s^(q)_(x-1-+q, y-q) when q <= y <= x <= (n-1)(q-1), else 0."""
    if not q <= y <= x <= (n - 1) * (q - 1):
        return Character.zero(n)
    first = x - 1 - q if shift == "minus" else x - 1 + q
    return trunc_schur2(first, y - q, q, n)


def kappa_gao_p2(d: int, e: int, n: int, reading: GaoReading = GaoReading()) -> Character:
    """Gao's conjectural p = 2 formula for kappa(d, e)."""
    out = Character.zero(n)
    k = 1
    # T_q vanishes unless q <= e - 2^(k+1) m, so k is bounded by log2 e
    while 1 << k <= e:
        q, step = 1 << k, 1 << (k + 1)
        for m in range(e // step + 1):
            x, y = d - step * m, e - step * m
            if reading.order == "literal":
                x, y = y, x
            T = gao_T(q, x, y, n, reading.shift)
            if T:
                out = out + nim_poly(n, m).frobenius(k + 1, 2) * T
        k += 1
    return out


def p_poly_p2(i: int, m: int, n: int, twist: bool = True) -> Character:
    """P_i(m) for p = 2 from the expanded truncated Schur function.

    (-1)^i sum_{j <= i, j = m+1 mod 2} e_(n-i-j) e_j N_n((m-j-1)/2), and
    P_i(0) = e_(n-i). With ``twist`` the Nim polynomial enters through one
    Frobenius twist, which is what makes the degrees line up with the
    general formula (and with Gao's F^(k+1)).
    """
    if not 0 <= i <= n - 3:
        raise ValueError(f"need 0 <= i <= n - 3, got i={i}")
    if m == 0:
        return elementary(n - i, n)
    out = Character.zero(n)
    for j in range(i + 1):
        if (j - m - 1) % 2:
            continue
        nim = nim_poly(n, (m - j - 1) // 2)
        if twist:
            nim = nim.frobenius(1, 2)
        out = out + elementary(n - i - j, n) * elementary(j, n) * nim
    return out if i % 2 == 0 else -out


@dataclass
class GeneralFormReport:
    p: int
    n: int
    cells: dict[tuple[int, int], bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.cells.values())

    def failures(self) -> list[tuple[int, int]]:
        return sorted(c for c, ok in self.cells.items() if not ok)


def general_form_rhs(d: int, e: int, P: Callable[[int, int], Character], p: int, n: int) -> Character:
    """sum over (r, m, i) of F^r P_i(m) * s_(e - p^r m, 0^(n-2), d + p^r(2-m-n+i) + n - 1).

    m runs over m >= 1 and 0 <= i <= n - 3. Only triples whose Schur index is weakly decreasing contribute:
    e - p^r m >= 0 >= d + p^r (2 - m - n + i) + n - 1.
    """
    out = Character.zero(n)
    r = 0
    # m >= 1 and e - p^r m >= 0 bound r by log_p e
    while p ** r <= e:
        q = p ** r
        for m in range(1, e // q + 1):
            for i in range(n - 2):
                last = d + q * (2 - m - n + i) + n - 1
                if last > 0:
                    continue
                lam = (e - q * m,) + (0,) * (n - 2) + (last,)
                s = schur(lam, n)
                if not s:
                    continue
                val = P(i, m)
                if val:
                    out = out + val.frobenius(r, p) * s
        r += 1
    return out


def kappa_general_form_check(kappa_table: Mapping[tuple[int, int], Character],
                             P: Callable[[int, int], Character], p: int, n: int,
                             cells: Iterable[tuple[int, int]]) -> GeneralFormReport:
    """Compare the general (r, m, i) formula against tabulated kappa values."""
    report = GeneralFormReport(p, n)
    for d, e in cells:
        if (d, e) not in kappa_table:
            raise KeyError(f"kappa table has no entry for (d, e) = ({d}, {e})")
        report.cells[(d, e)] = general_form_rhs(d, e, P, p, n) == kappa_table[(d, e)]
    return report
