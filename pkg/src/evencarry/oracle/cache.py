"""Persistent JSON cache of kernel and Prim dimensions, one file per (p, n, d, e).

Entries are write-once: storing a different value for an existing cell is an
error, so a cache can only ever confirm a recomputation.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from ..charring import Character
from .blocks import distinct_permutations, kernel_dims
from .prim import prim_dim

SCHEMA = "evencarry.kernel-cache/1"
ENV_VAR = "EVENCARRY_CACHE_DIR"
KINDS = ("kernel", "prim")


class CacheMismatch(RuntimeError):
    pass


class KernelCache:
    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)

    @classmethod
    def from_env(cls, default: str | os.PathLike | None = None) -> KernelCache | None:
        root = os.environ.get(ENV_VAR) or default
        return cls(root) if root else None

    def path(self, kind: str, p: int, n: int, d: int, e: int) -> Path:
        if kind not in KINDS:
            raise ValueError(f"unknown cache kind {kind!r}")
        return self.root / f"{kind}-p{p}-n{n}" / f"d{d}-e{e}.json"

    def get(self, kind: str, p: int, n: int, d: int, e: int) -> dict[tuple[int, ...], int] | None:
        path = self.path(kind, p, n, d, e)
        if not path.exists():
            return None
        obj = json.loads(path.read_text())
        if obj.get("schema") != SCHEMA:
            raise CacheMismatch(f"{path}: unsupported schema {obj.get('schema')!r}")
        if (obj["p"], obj["n"], obj["d"], obj["e"]) != (p, n, d, e):
            raise CacheMismatch(f"{path}: header does not match its key")
        return {tuple(w["u"]): w["dim"] for w in obj["weights"]}

    def put(self, kind: str, p: int, n: int, d: int, e: int, dims: dict[tuple[int, ...], int]) -> None:
        old = self.get(kind, p, n, d, e)
        dims = {tuple(u): int(k) for u, k in dims.items() if k}
        if old is not None:
            if old != dims:
                raise CacheMismatch(f"cached {kind} dimensions for (p={p}, n={n}, d={d}, e={e}) differ")
            return
        path = self.path(kind, p, n, d, e)
        path.parent.mkdir(parents=True, exist_ok=True)
        obj = {"schema": SCHEMA, "kind": kind, "p": p, "n": n, "d": d, "e": e,
               "weights": [{"u": list(u), "dim": k} for u, k in sorted(dims.items())]}
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")
        tmp.replace(path)


def _expand(dims: dict[tuple[int, ...], int], n: int, degree: int) -> Character:
    terms = {}
    for u, k in dims.items():
        for v in distinct_permutations(u):
            terms[v] = k
    return Character(n, terms, degree=degree)


def _cached_dims(cache, kind, p, n, d, e, compute, recompute):
    if cache is None:
        return compute()
    hit = cache.get(kind, p, n, d, e)
    if hit is not None and not recompute:
        return hit
    dims = compute()
    # put() compares against an existing entry
    cache.put(kind, p, n, d, e, dims)
    return dims


def cached_kernel_dims(d: int, e: int, p: int, n: int, cache: KernelCache | None,
                       recompute: bool = False) -> dict[tuple[int, ...], int]:
    return _cached_dims(cache, "kernel", p, n, d, e, lambda: kernel_dims(d, e, p, n), recompute)


def cached_kappa(d: int, e: int, p: int, n: int, cache: KernelCache | None,
                 recompute: bool = False) -> Character:
    if e < 1:
        return Character.zero(n)
    return _expand(cached_kernel_dims(d, e, p, n, cache, recompute), n, d + e - 1)


def cached_prim(d: int, e: int, p: int, n: int, cache: KernelCache | None,
                recompute: bool = False) -> Character:
    """prim_char with dominant-weight dimensions read from / written to ``cache``."""
    if e < 1:
        return Character.zero(n)

    def compute():
        kd = cached_kernel_dims(d, e, p, n, cache, recompute)
        out = {}
        for u, k in kd.items():
            dim = prim_dim(d, e, u, p, k)
            if dim:
                out[u] = dim
        return out

    return _expand(_cached_dims(cache, "prim", p, n, d, e, compute, recompute), n, d + e - 1)
