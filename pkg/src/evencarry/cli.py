"""Command-line interface: characters as JSON, text or triangles, and the verification suites.

    evencarry kappa --p 2 --n 3 --d 2 --e 2 --method all
    evencarry prim --p 3 --n 4 --m 7
    evencarry evencarry --p 5 --m 3
    evencarry nim --n 3 --m 2
    evencarry ms --p 5 --rows 2,3/2,1/1,1/0,0
    evencarry tiles --p 5 --n 4 --m 16
    evencarry verify --suite table1 --p 5 --n 4
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from typing import Callable

import click

from .carrycomb import even_carry_poly, nim_poly
from .charring import Character
from .formulas import (GaoReading, kappa_char0, kappa_even_carry, kappa_gao_p2, kappa_nim_p2,
                       kappa_recurrence)
from .oracle.blocks import kappa_oracle
from .oracle.cache import ENV_VAR, KernelCache, cached_kappa, cached_prim
from .oracle.prim import SPANS, prim_char
from .schur import ms
from .tiles import builtin_tileset, tile_sequences, tile_sum
from .verify import SUITES, run_suite

FORMATS = ("json", "text", "triangle")


@dataclass(frozen=True)
class RunConfig:
    p: int | None
    n: int
    fmt: str = "json"
    cache_dir: str | None = None

    def validate(self, need_prime: bool = True) -> None:
        if need_prime and (self.p is None or not _is_prime(self.p)):
            raise click.BadParameter(f"p={self.p} is not prime", param_hint="--p")
        if self.n < 3:
            raise click.BadParameter("n must be at least 3", param_hint="--n")
        if self.fmt == "triangle" and self.n != 3:
            raise click.BadParameter("triangle output needs n = 3", param_hint="--format")

    def cache(self) -> KernelCache | None:
        return KernelCache.from_env(self.cache_dir)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, int(p ** 0.5) + 1))


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, no insignificant whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def orbit_text(ch: Character) -> str:
    """Symmetric character as a sum over dominant weights, c*m(u)."""
    if not ch:
        return "0"
    # homogeneous representatives read better than min-zero normal forms
    terms = ch.homogeneous_lift(ch.degree if ch._degree_usable() else None)
    ordered = sorted(terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
    parts = [f"{c}*m({','.join(map(str, e))})" for e, c in ordered if list(e) == sorted(e, reverse=True)]
    if not ch.is_symmetric() or not parts:
        parts = [f"{c}*x^({','.join(map(str, e))})" for e, c in ordered]
    return " + ".join(parts).replace("+ -", "- ")


def emit(ch: Character, cfg: RunConfig, schema: str, **meta) -> None:
    if cfg.fmt == "json":
        obj = {"schema": schema, "character": ch.to_dict(cfg.p), **meta}
        click.echo(dumps(obj))
    elif cfg.fmt == "triangle":
        click.echo(ch.render_triangle())
    else:
        click.echo(orbit_text(ch))


_common = click.option("--format", "fmt", type=click.Choice(FORMATS), default="json", show_default=True)


def _fail(err: Exception):
    raise click.ClickException(str(err))


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Characters of line-bundle cohomology on the incidence correspondence over F_p."""


# kappa -----------------------------------------------------------------------

METHODS = ("oracle", "oracle-block", "recurrence", "even-carry", "nim", "gao", "char0")


def _method_fn(method: str, cfg: RunConfig, gao: GaoReading) -> Callable[[int, int], Character]:
    p, n = cfg.p, cfg.n
    if method == "oracle":
        return lambda d, e: cached_kappa(d, e, p, n, cfg.cache())
    if method == "oracle-block":
        return lambda d, e: kappa_oracle(d, e, p, n, method="block")
    if method == "char0":
        return lambda d, e: kappa_char0(d, e, n)
    if method in ("recurrence", "even-carry"):
        if n != 3:
            raise click.UsageError(f"method {method} needs n = 3")
        fn = kappa_recurrence if method == "recurrence" else kappa_even_carry
        return lambda d, e: fn(d, e, p)
    if method == "nim":
        if (p, n) != (2, 3):
            raise click.UsageError("method nim needs p = 2, n = 3")
        return lambda d, e: kappa_nim_p2(d, e)
    if method == "gao":
        if p != 2:
            raise click.UsageError("method gao needs p = 2")
        return lambda d, e: kappa_gao_p2(d, e, n, gao)
    raise click.UsageError(f"unknown method {method!r}")


def _applicable(method: str, d: int, e: int, p: int) -> bool:
    if method in ("recurrence", "even-carry"):
        return d >= e >= 1
    if method == "nim":
        k = e.bit_length() - 1
        return 2 <= e <= d < 1 << (k + 1)
    return True


@main.command()
@click.option("--p", type=int, required=True)
@click.option("--n", type=int, default=3, show_default=True)
@click.option("--d", type=int, help="single cell (with --e)")
@click.option("--e", type=int)
@click.option("--max", "max_d", type=int, help="all cells 1 <= e <= d <= MAX")
@click.option("--method", default="oracle", show_default=True,
              help=f"comma-separated subset of {','.join(METHODS)}, or 'all'")
@click.option("--gao-order", type=click.Choice(["swapped", "literal"]), default="swapped", show_default=True)
@click.option("--gao-shift", type=click.Choice(["plus", "minus"]), default="plus", show_default=True)
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None,
              help=f"kernel cache directory (default: ${ENV_VAR})")
@_common
def kappa(p, n, d, e, max_d, method, gao_order, gao_shift, cache_dir, fmt):
    """kappa(d, e) by one or more methods; several methods give an agreement report."""
    cfg = RunConfig(p, n, fmt, cache_dir)
    cfg.validate()
    if method == "all":
        # char0 is a reference value, not a characteristic-p route
        names = [m for m in METHODS if m != "char0"]
        if n != 3:
            names = [m for m in names if m not in ("recurrence", "even-carry", "nim")]
        if p != 2:
            names = [m for m in names if m not in ("nim", "gao")]
    else:
        names = [m.strip() for m in method.split(",") if m.strip()]
    gao = GaoReading(gao_order, gao_shift)
    fns = {m: _method_fn(m, cfg, gao) for m in names}
    if max_d is not None:
        cells = [(dd, ee) for dd in range(1, max_d + 1) for ee in range(1, dd + 1)]
    elif d is not None and e is not None:
        cells = [(d, e)]
    else:
        raise click.UsageError("give --d and --e, or --max")
    if fmt == "triangle" and (len(cells) > 1 or len(names) > 1):
        raise click.UsageError("triangle output is for a single cell and method")
    entries, disagreements = [], []
    for dd, ee in cells:
        values = {}
        for m, fn in fns.items():
            if not _applicable(m, dd, ee, p):
                continue
            try:
                values[m] = fn(dd, ee)
            except ValueError as err:
                _fail(err)
        for m, v in values.items():
            entries.append({"d": dd, "e": ee, "method": m, "character": v.to_dict(p)})
        agree = len({v for v in values.values()}) <= 1
        if not agree:
            disagreements.append((dd, ee))
        if fmt == "text":
            for m, v in values.items():
                click.echo(f"kappa({dd},{ee}) [{m}] = {orbit_text(v)}")
            if len(values) > 1:
                click.echo(f"kappa({dd},{ee}) methods {'agree' if agree else 'DISAGREE'}: {','.join(values)}")
        elif fmt == "triangle":
            click.echo(next(iter(values.values())).render_triangle())
    if fmt == "json":
        obj = {"schema": "evencarry.kappa-table/1", "p": p, "n": n, "entries": entries}
        if len(names) > 1:
            obj["agreement"] = {"all_agree": not disagreements,
                                "disagreements": [list(c) for c in disagreements]}
        click.echo(dumps(obj))
    if disagreements:
        sys.exit(1)


# Prim and friends -------------------------------------------------------------

@main.command()
@click.option("--p", type=int, required=True)
@click.option("--n", type=int, required=True)
@click.option("--m", type=int, help="Prim(m) = K^prim(m-1, m)")
@click.option("--d", type=int)
@click.option("--e", type=int)
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None,
              help=f"kernel cache directory (default: ${ENV_VAR})")
@click.option("--recompute", is_flag=True, help="recompute cached cells and compare")
@click.option("--span", type=click.Choice(SPANS), default="minimal", show_default=True,
              help="decomposables: R_+ K + R F_K(K) (minimal) or R F_K(K) alone")
@_common
def prim(p, n, m, d, e, cache_dir, recompute, span, fmt):
    """Character of the primitive cohomology K^prim(d, e)."""
    cfg = RunConfig(p, n, fmt, cache_dir)
    cfg.validate()
    if m is not None:
        if m < 1:
            raise click.BadParameter("m must be at least 1", param_hint="--m")
        d, e = m - 1, m
    elif d is None or e is None:
        raise click.UsageError("give --m, or --d and --e")
    try:
        if span == "minimal":
            ch = cached_prim(d, e, p, n, cfg.cache(), recompute)
        else:
            # only the default span is cached
            ch = prim_char(d, e, p, n, span)
    except Exception as err:  # cache mismatches and bad input alike
        _fail(err)
    emit(ch, cfg, "evencarry.prim/1", d=d, e=e, span=span)


@main.command()
@click.option("--p", type=int, required=True)
@click.option("--m", type=int, required=True)
@click.option("--dual", is_flag=True, help="print C_p(m)^dual")
@_common
def evencarry(p, m, dual, fmt):
    """Even-carry polynomial C_p(m)."""
    cfg = RunConfig(p, 3, fmt)
    cfg.validate()
    ch = even_carry_poly(m, p)
    emit(ch.dual() if dual else ch, cfg, "evencarry.even-carry/1", m=m, dual=dual)


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--m", type=int, required=True)
@_common
def nim(n, m, fmt):
    """Nim polynomial N_n(m)."""
    cfg = RunConfig(None, n, fmt)
    cfg.validate(need_prime=False)
    emit(nim_poly(n, m), cfg, "evencarry.nim/1", m=m)


def _parse_rows(text: str) -> list[list[int]]:
    try:
        return [[int(x) for x in row.split(",")] for row in text.split("/")]
    except ValueError:
        raise click.BadParameter("rows look like 2,3/2,1/1,1/0,0", param_hint="--rows")


@main.command("ms")
@click.option("--p", type=int, required=True)
@click.option("--rows", required=True, help="digit matrix rows separated by '/', entries by ','")
@_common
def ms_cmd(p, rows, fmt):
    """Minimal Schur function of a digit matrix (leftmost column most significant)."""
    mat = _parse_rows(rows)
    cfg = RunConfig(p, len(mat), fmt)
    cfg.validate()
    try:
        ch = ms(mat, p)
    except ValueError as err:
        _fail(err)
    emit(ch, cfg, "evencarry.ms/1", rows=mat)


@main.command()
@click.option("--p", type=int, required=True)
@click.option("--n", type=int, required=True)
@click.option("--m", type=int, required=True)
@click.option("--literal", is_flag=True, help="use the printed k-ranges for the n=3 tiles")
@click.option("--sequences", is_flag=True, help="list the contributing tile sequences")
@_common
def tiles(p, n, m, literal, sequences, fmt):
    """Signed sum over compatible tile sequences of total degree 2m - 2."""
    cfg = RunConfig(p, n, fmt)
    cfg.validate()
    try:
        ts = builtin_tileset(n, p, corrected=not literal)
    except ValueError as err:
        _fail(err)
    ch = tile_sum(ts, m, p, n)
    meta = {"m": m}
    if sequences:
        seqs = tile_sequences(ts, m, p)
        meta["sequences"] = [[{"c_out": t.c_out, "c_in": t.c_in, "v": list(t.v), "eps": t.eps} for t in s]
                             for s in seqs]
        if fmt == "text":
            for s in seqs:
                click.echo(" | ".join(f"({t.c_out},{t.c_in},{t.v},{t.eps:+d})" for t in s))
    emit(ch, cfg, "evencarry.tiles/1", **meta)


# verify -------------------------------------------------------------------------

_SUITE_PARAMS = {
    "n3-threeway": ("p", "max"),
    "nim": ("max_k",),
    "even-carry": ("p",),
    "nim-even-carry": ("max_m",),
    "trunc": (),
    "known-cases": ("p", "n", "max"),
    "exact-seq": ("p", "n", "max"),
    "prim7": (),
    "nim-table": ("p", "n", "max_m", "cache"),
    "conj-prim-nim": ("p", "n", "max_m"),
    "conj-prim-vanishing": ("p", "n", "max_sum"),
    "tiles": ("p",),
    "gao": ("n", "max"),
    "general-form": ("p", "n", "max"),
}


@main.command()
@click.option("--suite", "suites", multiple=True, type=click.Choice(sorted(SUITES) + ["all"]),
              default=("all",), show_default=True)
@click.option("--p", type=int)
@click.option("--n", type=int)
@click.option("--max", "max_", type=int)
@click.option("--max-k", type=int)
@click.option("--max-m", type=int)
@click.option("--max-sum", type=int)
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text", show_default=True)
def verify(suites, p, n, max_, max_k, max_m, max_sum, cache_dir, fmt):
    """Run verification suites; exit status 0 iff every check passes."""
    if p is not None and not _is_prime(p):
        raise click.BadParameter(f"p={p} is not prime", param_hint="--p")
    given = {"p": p, "n": n, "max": max_, "max_k": max_k, "max_m": max_m, "max_sum": max_sum,
             "cache": KernelCache.from_env(cache_dir)}
    names = sorted(SUITES) if "all" in suites else list(suites)
    results = []
    for name in names:
        kw = {k: given[k] for k in _SUITE_PARAMS[name] if given[k] is not None}
        try:
            results.append(run_suite(name, **kw))
        except ValueError as err:
            raise click.UsageError(f"{name}: {err}")
    ok = all(r.passed for r in results)
    if fmt == "json":
        click.echo(dumps({"schema": "evencarry.verify/1", "passed": ok,
                          "suites": [r.to_dict() for r in results]}))
    else:
        for r in results:
            for c in r.checks:
                tail = f"  ({c.detail})" if c.detail else ""
                click.echo(f"{'PASS' if c.passed else 'FAIL'} [{r.kind}] {r.suite}: {c.name}{tail}")
            for note in r.notes:
                click.echo(f"     note {r.suite}: {note}")
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
