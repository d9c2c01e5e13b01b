"""Carry-annotated tiles and the sequences of them that build Prim polynomials."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence, Union

from .charring import Character
from .schur import ms

END = "END"
CarryIn = Union[int, str]
Affine = tuple[int, int, int]  # coef_k * k + coef_p * p + const


@dataclass(frozen=True, order=True)
class Tile:
    c_out: int
    c_in: CarryIn
    v: tuple[int, ...]
    eps: int = 1

    def degree(self) -> int:
        return sum(self.v)

    def is_zero(self) -> bool:
        return self.c_out == 0 and self.c_in == 0 and not any(self.v) and self.eps == 1

    def validate(self, n: int, p: int) -> None:
        if len(self.v) != n:
            raise ValueError(f"tile vector {self.v} does not have length {n}")
        if not 0 <= self.c_out <= n - 2:
            raise ValueError(f"out-carry {self.c_out} out of range")
        if self.c_in != END and not 0 <= self.c_in <= n - 2:
            raise ValueError(f"in-carry {self.c_in} out of range")
        if not _valid_vector(self.v, p):
            raise ValueError(f"tile vector {self.v} is not a decreasing base-{p} digit column")
        if self.eps == 0:
            raise ValueError("tile coefficient must be nonzero")


def _valid_vector(v: Sequence[int], p: int) -> bool:
    return (all(0 <= x <= p - 1 for x in v)
            and all(v[i] >= v[i + 1] for i in range(len(v) - 1)))


@dataclass(frozen=True)
class TileFamily:
    """A row of a tile table: entries are affine in the parameters k and p."""

    c_out: int
    c_in: tuple[CarryIn, ...]
    v: tuple[Affine, ...]
    eps: int
    # optional tighter k-ranges per in-carry: c_in -> (k_min, k_max - p)
    k_bounds: tuple[tuple[CarryIn, int, int], ...] = ()

    @classmethod
    def from_dict(cls, obj: dict) -> TileFamily:
        entries = []
        for e in obj["v"]:
            if len(e) != 3 or not all(isinstance(x, int) for x in e):
                raise ValueError(f"malformed affine entry {e!r}")
            entries.append(tuple(e))
        c_in = tuple(END if c == END else int(c) for c in obj["c_in"])
        bounds = tuple((END if c == END else int(c), int(lo), int(hi))
                       for c, (lo, hi) in sorted(obj.get("k_bounds", {}).items()))
        return cls(int(obj["c_out"]), c_in, tuple(entries), int(obj["eps"]), bounds)

    def to_dict(self) -> dict:
        out = {"c_out": self.c_out, "c_in": list(self.c_in),
               "v": [list(e) for e in self.v], "eps": self.eps}
        if self.k_bounds:
            out["k_bounds"] = {str(c): [lo, hi] for c, lo, hi in self.k_bounds}
        return out

    def evaluate(self, k: int, p: int) -> tuple[int, ...]:
        return tuple(a * k + b * p + c for a, b, c in self.v)


def expand_family(family: TileFamily, p: int, n: int | None = None,
                  corrected: bool = False) -> list[Tile]:
    """Concrete tiles for every admissible k (k <= p - 2 for END variants).

    With ``corrected`` the family's k_bounds further restrict k to the values
    that correspond to genuine base-p digits.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    if n is not None and len(family.v) != n:
        raise ValueError(f"family has {len(family.v)} entries, expected {n}")
    out = []
    for c_in in family.c_in:
        lo, top = 0, (p - 2 if c_in == END else p - 1)
        if corrected:
            for c, b_lo, b_hi in family.k_bounds:
                if c == c_in:
                    lo, top = max(lo, b_lo), min(top, p + b_hi)
        # families without k expand once
        ks = range(lo, top + 1) if any(a for a, _, _ in family.v) else [0]
        seen = set()
        for k in ks:
            v = family.evaluate(k, p)
            if v in seen or not _valid_vector(v, p):
                continue
            seen.add(v)
            out.append(Tile(family.c_out, c_in, v, family.eps))
    return out


@lru_cache(maxsize=None)
def _load_tables() -> dict:
    text = resources.files("evencarry.data").joinpath("tiles.json").read_text()
    return json.loads(text)


def table_families(name: str) -> list[TileFamily]:
    """Families of a shipped table: "n3", "n4" or "n6_cout2_end"."""
    tables = _load_tables()["tables"]
    if name not in tables:
        raise KeyError(f"no tile table named {name!r}")
    return [TileFamily.from_dict(f) for f in tables[name]["families"]]


def p2_tileset(n: int) -> list[Tile]:
    """The simplest carry assignment for p = 2: even runs of ones, no carries."""
    tiles = [Tile(0, 0, (1,) * (2 * c) + (0,) * (n - 2 * c), 1) for c in range(n // 2 + 1)]
    tiles.append(Tile(0, END, (0,) * n, 1))
    return tiles


def builtin_tileset(n: int, p: int, corrected: bool = False) -> list[Tile]:
    """Expanded built-in tiles: Table n=3, Table n=4, or the simple p = 2 set."""
    if n == 3:
        families = table_families("n3")
    elif n == 4:
        families = table_families("n4")
    elif p == 2:
        return p2_tileset(n)
    else:
        raise ValueError(f"no built-in tileset for n={n}, p={p}")
    tiles = []
    for f in families:
        tiles.extend(expand_family(f, p, n, corrected))
    return sorted(set(tiles), key=_tile_key)


def _tile_key(t: Tile):
    return (t.c_out, -1 if t.c_in == END else t.c_in, t.v, t.eps)


def tile_sequences(tiles: Iterable[Tile], d: int, p: int, max_len: int | None = None) -> list[tuple[Tile, ...]]:
    """Tile sequences (zero tail dropped) with total degree 2d - 2.

    Position i contributes p^i |v(T_i)|. A sequence is complete once the degree
    is used up and the next position would need in-carry 0, i.e. the rest can
    be zero tiles.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    tiles = list(tiles)
    target = 2 * d - 2
    if max_len is None:
        max_len = 2
        while p ** (max_len - 2) <= max(target, 1):
            max_len += 1
    by_cin: dict[CarryIn, list[Tile]] = {}
    for t in tiles:
        by_cin.setdefault(t.c_in, []).append(t)
    found = []

    def rec(i: int, c_in: CarryIn, remaining: int, prefix: tuple[Tile, ...]):
        if remaining == 0 and c_in == 0:
            found.append(prefix)
        if i >= max_len:
            return
        q = p ** i
        for t in by_cin.get(c_in, ()):
            if remaining == 0 and t.is_zero():
                # that is the zero tail, already counted
                continue
            deg = q * t.degree()
            if deg > remaining or (remaining - deg) % (q * p):
                continue
            rec(i + 1, t.c_out, remaining - deg, prefix + (t,))

    rec(0, END, target, ())
    return found


def sequence_value(seq: Sequence[Tile], p: int, n: int) -> Character:
    """prod_i eps(T_i) F^i s_v(T_i), evaluated as an MS of the digit matrix."""
    if not seq:
        return Character.one(n)
    sign = 1
    for t in seq:
        sign *= t.eps
    # rows as printed: leftmost column is the highest position
    rows = [[seq[len(seq) - 1 - c].v[r] for c in range(len(seq))] for r in range(n)]
    return ms(rows, p).scale(sign)


def tile_sum(tiles: Iterable[Tile], d: int, p: int, n: int) -> Character:
    """Signed sum over compatible tile sequences of degree 2d - 2."""
    out = Character.zero(n)
    for seq in tile_sequences(tiles, d, p):
        out = out + sequence_value(seq, p, n)
    return out


def _ms_or_zero(rows: list[list[int]], p: int) -> Character:
    if any(not 0 <= x <= p - 1 for r in rows for x in r):
        return Character.zero(len(rows))
    return ms(rows, p)


def nim_formula_two_digit(d1: int, d0: int, p: int) -> Character:
    """Prim(p d1 + d0) for n = 4 as six signed MS terms.

    Matrices with an entry outside [0, p-1] or a column that is not weakly
    decreasing count as zero.
    """
    if not (0 <= d0 < p and 0 <= d1 < p) or (d1, d0) == (0, 0):
        raise ValueError("need base-p digits (d1, d0) != (0, 0)")
    terms = [
        (1, [[d1, d0 - 1], [d1, d0 - 1], [0, 0], [0, 0]]),
        (1, [[d1 - 1, p - 2], [d1 - 1, d0], [1, d0], [0, 0]]),
        (-1, [[d1 - 1, p - 3], [d1 - 1, d0], [1, d0], [0, 1]]),
        (1, [[d1 - 1, p - 2], [d1 - 1, p - 2], [0, d0 + 1], [0, d0 + 1]]),
        (1, [[d1 - 1, d0 - 1], [d1 - 1, d0 - 1], [1, 0], [1, 0]]),
        (1, [[d1 - 2, p - 2], [d1 - 2, p - 2], [1, d0 + 1], [1, d0 + 1]]),
    ]
    out = Character.zero(4)
    for sign, rows in terms:
        out = out + _ms_or_zero(rows, p).scale(sign)
    return out


def increment_n(t: Tile) -> Tile:
    return Tile(t.c_out, t.c_in, t.v + (0,), t.eps)


def dual_tile(t: Tile, n: int, p: int) -> Tile:
    """(n-2-c_out, n-2-c_in, reversed complement); END tiles complement against p-2."""
    if t.c_in == END:
        return Tile(n - 2 - t.c_out, END, tuple(p - 2 - a for a in reversed(t.v)), t.eps)
    return Tile(n - 2 - t.c_out, n - 2 - t.c_in, tuple(p - 1 - a for a in reversed(t.v)), t.eps)


def _partitions_in_box(rows: int, cols: int):
    """Partitions with at most ``rows`` parts, each at most ``cols``."""
    def rec(prefix, left, cap):
        if left == 0:
            yield prefix
            return
        for x in range(cap, -1, -1):
            if x == 0:
                yield prefix + (0,) * left
                return
            yield from rec(prefix + (x,), left - 1, x)
    yield from rec((), rows, cols)


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    lam = [x for x in lam if x > 0]
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def end_tiles(n: int, p_unused: int | None, c: int) -> list[TileFamily]:
    """Conjectured END tiles with out-carry c, one family per lambda in a
    (n-2-c) x c box: (p-2-mu_c, ..., p-2-mu_1, k+c-1, k+c-1, lambda), sign (-1)^|lambda|.

    The families are symbolic in p; the second argument is accepted for
    symmetry with the other constructors and ignored.
    """
    if not 0 <= c <= n - 2:
        raise ValueError(f"need 0 <= c <= n - 2, got c={c}")
    out = []
    for lam in _partitions_in_box(n - 2 - c, c):
        mu = conjugate(lam) + (0,) * c
        mu = mu[:c]
        head = tuple((0, 1, -2 - mu[j]) for j in reversed(range(c)))
        mid = ((1, 0, c - 1), (1, 0, c - 1))
        tail = tuple((0, 0, x) for x in lam)
        out.append(TileFamily(c, (END,), head + mid + tail, (-1) ** sum(lam)))
    return out


def families_equal_symbolic(a: Iterable[TileFamily], b: Iterable[TileFamily]) -> bool:
    """Equality of two family lists as multisets of symbolic rows."""
    key = lambda f: (f.c_out, tuple(map(str, f.c_in)), f.v, f.eps)
    return sorted(map(key, a)) == sorted(map(key, b))
