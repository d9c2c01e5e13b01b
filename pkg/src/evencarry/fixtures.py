"""Golden data transcribed from published tables, shipped as JSON."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .charring import Character
from .schur import ms


@lru_cache(maxsize=None)
def _load(name: str) -> dict:
    return json.loads(resources.files("evencarry.data").joinpath(name).read_text())


def table1() -> dict:
    """Prim(m) for p = 5, n = 4 as signed MS terms, m = 1..20."""
    return _load("table1.json")


def golden() -> dict:
    """The three triangle displays and Prim(7) for n = 4, p = 3."""
    return _load("golden.json")


def table1_character(row: dict, p: int = 5) -> Character:
    out = None
    for term in row["terms"]:
        val = ms(term["rows"], p).scale(term["sign"])
        out = val if out is None else out + val
    return out


def prim7_character() -> Character:
    g = golden()["prim7"]
    out = Character.zero(g["n"])
    for t in g["orbits"]:
        out = out + Character.orbit_sum(t["exp"], t["coeff"])
    return out
