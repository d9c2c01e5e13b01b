"""Characters of SL_n: symmetric Laurent polynomials modulo x_1 ... x_n = 1.

A :class:`Character` stores one integer coefficient per normalized exponent
vector (minimum entry 0). Two characters are equal iff their normal forms
agree, so degree shifts by multiples of (1, ..., 1) are invisible.
"""

from __future__ import annotations

import itertools
import json
from typing import Iterable, Mapping

import numpy as np

Exponent = tuple[int, ...]

# products with more pairs than this go through the vectorized path
_VECTOR_THRESHOLD = 4000
_INT64_SAFE = 1 << 62


def normalize(e: Iterable[int]) -> Exponent:
    """Canonical representative of x^e modulo x_1 ... x_n = 1."""
    e = tuple(e)
    if not e:
        return e
    m = min(e)
    if m == 0:
        return e
    return tuple(x - m for x in e)


class Character:
    """An element of the character ring A with ``n`` variables.

    Instances are treated as immutable. ``degree`` is optional metadata
    recording the homogeneous degree of a lift, when one is known; it does
    not take part in equality.
    """

    __slots__ = ("n", "terms", "degree", "_hash")

    def __init__(self, n: int, terms: Mapping[Iterable[int], int] | None = None,
                 degree: int | None = None):
        self.n = n
        self.degree = degree
        self._hash = None
        acc: dict[Exponent, int] = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != n:
                    raise ValueError(f"exponent {e} has length {len(e)}, expected {n}")
                if c:
                    key = normalize(e)
                    acc[key] = acc.get(key, 0) + c
        self.terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def _raw(cls, n: int, terms: dict[Exponent, int], degree: int | None = None) -> "Character":
        # terms must already be normalized with no zero coefficients
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        obj.degree = degree
        obj._hash = None
        return obj

    # construction helpers

    @classmethod
    def zero(cls, n: int) -> "Character":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "Character":
        return cls._raw(n, {(0,) * n: 1}, 0)

    @classmethod
    def monomial(cls, exp: Iterable[int], coeff: int = 1) -> "Character":
        exp = tuple(exp)
        return cls(len(exp), {exp: coeff}, sum(exp))

    @classmethod
    def orbit_sum(cls, exp: Iterable[int], coeff: int = 1) -> "Character":
        """Sum of all distinct permutations of x^exp."""
        exp = tuple(exp)
        return cls(len(exp), {q: coeff for q in set(itertools.permutations(exp))}, sum(exp))

    # basic protocol

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self == Character.one(self.n).scale(other)
        if not isinstance(other, Character):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        if not self.terms:
            return f"Character(n={self.n}, 0)"
        body = " + ".join(f"{c}*x^{e}" for e, c in sorted(self.terms.items()))
        return f"Character(n={self.n}, {body})"

    def coefficient(self, e: Iterable[int]) -> int:
        return self.terms.get(normalize(e), 0)

    def _check(self, other: "Character") -> None:
        if not isinstance(other, Character):
            raise TypeError(f"expected Character, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"mismatched number of variables: {self.n} vs {other.n}")

    # ring operations

    def __add__(self, other: "Character") -> "Character":
        self._check(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
        deg = self.degree if self.degree == other.degree else None
        return Character._raw(self.n, acc, deg)

    def __neg__(self) -> "Character":
        return self.scale(-1)

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def scale(self, k: int) -> "Character":
        if k == 0:
            return Character.zero(self.n)
        return Character._raw(self.n, {e: c * k for e, c in self.terms.items()}, self.degree)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        if not self.terms or not other.terms:
            return Character.zero(self.n)
        deg = None
        if self.degree is not None and other.degree is not None:
            deg = self.degree + other.degree
        if len(self.terms) * len(other.terms) > _VECTOR_THRESHOLD:
            bound = sum(map(abs, self.terms.values())) * sum(map(abs, other.terms.values()))
            if bound < _INT64_SAFE:
                return Character._raw(self.n, _mul_vectorized(self.terms, other.terms, self.n), deg)
        acc: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                s = tuple(a + b for a, b in zip(e1, e2))
                m = min(s)
                if m:
                    s = tuple(x - m for x in s)
                acc[s] = acc.get(s, 0) + c1 * c2
        return Character._raw(self.n, {e: c for e, c in acc.items() if c}, deg)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Character":
        out = Character.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    # involutions and twists

    def dual(self) -> "Character":
        """Send each x_i to its inverse."""
        out = {normalize(tuple(-x for x in e)): c for e, c in self.terms.items()}
        deg = None
        if self.degree is not None:
            # choose the nonnegative lift of smallest degree congruent to -degree
            deg = (-self.degree) % self.n if self.n else 0
        return Character._raw(self.n, out, deg)

    def frobenius(self, k: int, p: int) -> "Character":
        """Apply the k-fold Frobenius twist x_i -> x_i^(p^k)."""
        if k < 0:
            raise ValueError("frobenius power must be nonnegative")
        if k == 0:
            return self
        q = p ** k
        out = {tuple(q * x for x in e): c for e, c in self.terms.items()}
        deg = None if self.degree is None else q * self.degree
        return Character._raw(self.n, out, deg)

    def is_symmetric(self) -> bool:
        for e, c in self.terms.items():
            for sigma in set(itertools.permutations(e)):
                if self.terms.get(normalize(sigma), 0) != c:
                    return False
        return True

    def with_degree(self, degree: int | None) -> "Character":
        return Character._raw(self.n, self.terms, degree)

    # inspection

    def homogeneous_lift(self, degree: int | None = None) -> dict[Exponent, int]:
        """Lift every term to a common homogeneous degree.

        Without an explicit degree the smallest workable one is used. Raises
        ValueError when the terms are not all congruent modulo n.
        """
        if not self.terms:
            return {}
        n = self.n
        sizes = {sum(e) for e in self.terms}
        if len({s % n for s in sizes}) > 1:
            raise ValueError("character is not homogeneous modulo x_1...x_n = 1")
        top = max(sizes)
        if degree is None:
            degree = top
        if degree < top or (degree - top) % n:
            raise ValueError(f"cannot lift to degree {degree}")
        out = {}
        for e, c in self.terms.items():
            shift = (degree - sum(e)) // n
            out[tuple(x + shift for x in e)] = c
        return out

    def highest_weight(self) -> Exponent:
        """Lexicographically largest sorted-descending exponent in the support.

        For characters of genuine representations this is the dominant
        weight that is maximal in dominance order.
        """
        if not self.terms:
            raise ValueError("zero character has no highest weight")
        lifted = self.homogeneous_lift()
        return max(tuple(sorted(e, reverse=True)) for e in lifted)

    def render_triangle(self) -> str:
        """Triangle layout for n = 3: one row per exponent of x_1 (descending),
        entries by exponent of x_2 (descending), zero ends trimmed."""
        if self.n != 3:
            raise ValueError("triangle rendering needs n = 3")
        if not self.terms:
            return "0"
        lifted = self.homogeneous_lift(self.degree if self._degree_usable() else None)
        D = sum(next(iter(lifted)))
        rows = []
        for a1 in range(D, -1, -1):
            row = [lifted.get((a1, a2, D - a1 - a2), 0) for a2 in range(D - a1, -1, -1)]
            while row and row[-1] == 0:
                row.pop()
            while row and row[0] == 0:
                row.pop(0)
            rows.append(" ".join(str(c) for c in row))
        while rows and not rows[0]:
            rows.pop(0)
        while rows and not rows[-1]:
            rows.pop()
        return "\n".join(rows)

    def _degree_usable(self) -> bool:
        if self.degree is None or not self.terms:
            return False
        top = max(sum(e) for e in self.terms)
        return self.degree >= top and (self.degree - top) % self.n == 0

    # serialization

    def to_dict(self, p: int | None = None) -> dict:
        return {
            "n": self.n,
            "p": p,
            "terms": [{"exp": list(e), "coeff": c} for e, c in sorted(self.terms.items())],
        }

    def to_json(self, p: int | None = None) -> str:
        return json.dumps(self.to_dict(p), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> "Character":
        n = data["n"]
        return cls(n, {tuple(t["exp"]): t["coeff"] for t in data["terms"]})

    @classmethod
    def from_json(cls, text: str) -> "Character":
        return cls.from_dict(json.loads(text))


def _mul_vectorized(t1: dict, t2: dict, n: int) -> dict:
    e1 = np.array(list(t1.keys()), dtype=np.int64)
    c1 = np.array(list(t1.values()), dtype=np.int64)
    e2 = np.array(list(t2.keys()), dtype=np.int64)
    c2 = np.array(list(t2.values()), dtype=np.int64)
    top = int(e1.max()) + int(e2.max()) + 1
    radix = np.array([top ** i for i in range(n)], dtype=np.int64)
    keys_parts, coef_parts = [], []
    chunk = max(1, 2_000_000 // max(1, len(e2)))
    for start in range(0, len(e1), chunk):
        s = e1[start:start + chunk, None, :] + e2[None, :, :]
        s = s.reshape(-1, n)
        s -= s.min(axis=1, keepdims=True)
        keys_parts.append(s @ radix)
        coef_parts.append((c1[start:start + chunk, None] * c2[None, :]).reshape(-1))
    keys = np.concatenate(keys_parts)
    coefs = np.concatenate(coef_parts)
    order = np.argsort(keys, kind="stable")
    keys = keys[order]
    coefs = coefs[order]
    starts = np.flatnonzero(np.r_[True, keys[1:] != keys[:-1]])
    sums = np.add.reduceat(coefs, starts)
    ukeys = keys[starts]
    out = {}
    for k, c in zip(ukeys.tolist(), sums.tolist()):
        if c:
            e = []
            for _ in range(n):
                k, r = divmod(k, top)
                e.append(r)
            out[tuple(e)] = c
    return out


def one(n: int) -> Character:
    return Character.one(n)


def zero(n: int) -> Character:
    return Character.zero(n)


def add(a: Character, b: Character) -> Character:
    return a + b


def scale(c: Character, k: int) -> Character:
    return c.scale(k)


def mul(a: Character, b: Character) -> Character:
    return a * b


def dual(c: Character) -> Character:
    return c.dual()


def frobenius(c: Character, k: int, p: int) -> Character:
    return c.frobenius(k, p)


def is_symmetric(c: Character) -> bool:
    return c.is_symmetric()


def render_triangle(c: Character) -> str:
    return c.render_triangle()
