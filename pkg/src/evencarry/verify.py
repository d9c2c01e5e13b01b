"""Named verification suites.

Each suite returns a SuiteResult holding named checks and free-form notes.
Theorem checks compare proven identities; conjecture checks compare
conjectured ones and a failure there is a finding rather than a bug.
Notes record the status of alternative (printed) readings where the tested
form differs from the literal one.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Callable

from .carrycomb import even_carry_poly, even_carry_poly_digits, nim_poly
from .charring import Character
from .fixtures import golden, prim7_character, table1, table1_character
from .formulas import (LITERAL_GAO, GaoReading, kappa_even_carry, kappa_gao_p2,
                       kappa_general_form_check, kappa_known_small_e, kappa_nim_p2,
                       kappa_recurrence, p_poly_p2)
from .oracle.blocks import cokernel_char, kappa_oracle
from .oracle.cache import KernelCache, cached_prim
from .oracle.prim import prim_char, vanishing_scan
from .schur import complete, schur, trunc_schur2, trunc_sym, trunc_sym_via_resolution
from .tiles import (builtin_tileset, end_tiles, families_equal_symbolic, nim_formula_two_digit,
                    table_families, tile_sum)

THEOREM = "theorem-check"
CONJECTURE = "conjecture-check"
GOLDEN = "golden"


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteResult:
    suite: str
    kind: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, failures: list, limit: int = 8) -> None:
        detail = "" if not failures else f"{len(failures)} failures, first: {failures[:limit]}"
        self.checks.append(Check(name, not failures, detail))

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "kind": self.kind,
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
            "notes": list(self.notes),
        }


def _cells(max_d: int):
    return [(d, e) for d in range(1, max_d + 1) for e in range(1, d + 1)]


# kappa for n = 3 -------------------------------------------------------------

def suite_n3_threeway(p: int = 3, max: int = 40) -> SuiteResult:
    """Recurrence, even-carry closed form and oracle agree for 1 <= e <= d <= max."""
    res = SuiteResult("n3-threeway", THEOREM)
    rec_vs_ec, ec_vs_oracle = [], []
    for d, e in _cells(max):
        ec = kappa_even_carry(d, e, p)
        if kappa_recurrence(d, e, p) != ec:
            rec_vs_ec.append((d, e))
        if kappa_oracle(d, e, p, 3) != ec:
            ec_vs_oracle.append((d, e))
    res.add(f"recurrence = even-carry, p={p}, d<={max}", rec_vs_ec)
    res.add(f"even-carry = oracle, p={p}, d<={max}", ec_vs_oracle)
    return res


def suite_nim(max_k: int = 4) -> SuiteResult:
    """p = 2 Nim formula on each window 2^k <= e <= d < 2^(k+1)."""
    res = SuiteResult("nim", THEOREM)
    vs_ec, vs_oracle = [], []
    for k in range(1, max_k + 1):
        for d in range(1 << k, 1 << (k + 1)):
            for e in range(1 << k, d + 1):
                nim = kappa_nim_p2(d, e)
                if nim != kappa_even_carry(d, e, 2):
                    vs_ec.append((d, e))
                if nim != kappa_oracle(d, e, 2, 3):
                    vs_oracle.append((d, e))
    res.add(f"Nim formula = even-carry, k<={max_k}", vs_ec)
    res.add(f"Nim formula = oracle, k<={max_k}", vs_oracle)
    return res


# even-carry polynomials -------------------------------------------------------

def suite_even_carry(p: int = 3) -> SuiteResult:
    """Small case, leading-digit recurrence and digit formula, for all m < p^3."""
    res = SuiteResult("even-carry", THEOREM)
    top = p ** 3
    res.add(f"C_p(m) = s_(m-1) for m < p, p={p}",
            [m for m in range(1, p) if even_carry_poly(m, p) != complete(m - 1, 3)])

    def rec_rhs(t, k, m):
        q = p ** k
        return (complete(t, 3).frobenius(k, p) * even_carry_poly(m, p)
                + complete(t - 2, 3).frobenius(k, p) * even_carry_poly(q - 1 - m, p).dual())

    bad, bad_k0 = [], []
    for k in range(0, 3):
        for t in range(1, p):
            for m in range(p ** k):
                if t * p ** k + m >= top:
                    continue
                ok = even_carry_poly(t * p ** k + m, p) == rec_rhs(t, k, m)
                if not ok:
                    (bad_k0 if k == 0 else bad).append((t, k, m))
    res.add(f"leading-digit recurrence, k >= 1, p={p}", bad)
    res.notes.append(f"recurrence at k = 0 (m = 0): {'holds' if not bad_k0 else f'fails for t in {[t for t, _, _ in bad_k0]}'}"
                     " since C_p(0) = 0 while C_p(t) = s_(t-1)")
    res.add(f"digit formula = enumeration, m < p^3, p={p}",
            [m for m in range(1, top) if even_carry_poly_digits(m, p) != even_carry_poly(m, p)])
    return res


def suite_nim_even_carry(max_m: int = 64) -> SuiteResult:
    res = SuiteResult("nim-even-carry", THEOREM)
    res.add(f"C_2(2m) = 0, m<{max_m}", [m for m in range(max_m) if even_carry_poly(2 * m, 2)])
    res.add(f"C_2(2m+1) = F(N_3(m))^dual, m<{max_m}",
            [m for m in range(max_m)
             if even_carry_poly(2 * m + 1, 2) != nim_poly(3, m).frobenius(1, 2).dual()])
    return res


# truncated Schur functions ----------------------------------------------------

_TRUNC_CASES = ((3, 2, 2), (3, 2, 4), (3, 2, 8), (3, 3, 3), (3, 3, 9), (3, 5, 5),
                (4, 2, 2), (4, 2, 4), (4, 3, 3), (4, 5, 5), (5, 2, 4), (5, 3, 3))


def suite_trunc() -> SuiteResult:
    res = SuiteResult("trunc", THEOREM)
    resolution, dual1, dual2, two_row, general = [], [], [], [], []
    for n, p, q in _TRUNC_CASES:
        top = n * (q - 1)
        for a in range(top + 2):
            if trunc_sym(a, q, n) != trunc_sym_via_resolution(a, q, n, p):
                resolution.append((n, q, a))
            if a <= top and trunc_sym(a, q, n).dual() != trunc_sym(top - a, q, n):
                dual1.append((n, q, a))
        for a in range(top + 1):
            for b in range(a + 1):
                if trunc_schur2(a, b, q, n).dual() != trunc_schur2(top - b, top - a, q, n):
                    dual2.append((n, q, a, b))
        for ap in range(q):
            for b in range(q):
                lhs = trunc_schur2(top - ap, b, q, n)
                if n == 3 and lhs != schur((ap + b, ap), n):
                    two_row.append((q, ap, b))
                if lhs != schur((ap + b,) + (ap,) * (n - 2), n):
                    general.append((n, q, ap, b))
    res.add("truncated symmetric function = resolution formula", resolution)
    res.add("duality of s_a^(q)", dual1)
    res.add("duality of s_(a,b)^(q)", dual2)
    res.add("s^(q)_(n(q-1)-a', b) = s_(a'+b, a'), n = 3", two_row)
    res.add("s^(q)_(n(q-1)-a', b) = s_(a'+b, a', ..., a'), all n", general)
    res.notes.append("the two-part index (a'+b, a') is the n = 3 case; for n > 3 the middle "
                     "rows repeat a'")
    bad = []
    for tri in golden()["triangles"]:
        lam = tuple(tri["lam"])
        ch = schur(lam, tri["n"]) if tri["kind"] == "schur" else trunc_schur2(*lam, tri["q"], tri["n"], tri["p"])
        if ch.render_triangle().split("\n") != tri["display"]:
            bad.append(tri["anchor"])
    res.add("triangle displays reproduced byte for byte", bad)
    return res


# oracle -----------------------------------------------------------------------

def suite_known_cases(p: int = 3, n: int = 3, max: int = 25) -> SuiteResult:
    res = SuiteResult("known-cases", THEOREM)
    small, middle = [], []
    for d in range(0, max + 1):
        for e in range(1, min(2 * p, max + 1)):
            known = kappa_known_small_e(d, e, p, n)
            if known is None:
                continue
            if kappa_oracle(d, e, p, n) != known:
                (small if e < p else middle).append((d, e))
    res.add(f"e < p: kappa = s_(e-1, d), p={p}, n={n}", small)
    res.add(f"p <= e < 2p <= d+1: kappa = s^(p)_(d-1+p, e-p), p={p}, n={n}", middle)
    return res


def suite_exact_seq(p: int = 2, n: int = 3, max: int = 15) -> SuiteResult:
    """The cokernel of mu_(d,e) against the kernel side of the four-term sequence."""
    res = SuiteResult("exact-seq", THEOREM)
    bad, literal_bad, sym_bad = [], [], []
    for d, e in _cells(max):
        coker = cokernel_char(d, e, p, n)
        if coker != kappa_oracle(e, d, p, n):
            bad.append((d, e))
        if coker.dual() != kappa_oracle(e, d, p, n):
            literal_bad.append((d, e))
        if d <= 6 and kappa_oracle(d, e, p, n, method="block", full=True) != kappa_oracle(d, e, p, n):
            sym_bad.append((d, e))
    res.add(f"coker mu_(d,e) = kappa(e, d), p={p}, n={n}, d<={max}", bad)
    res.add(f"full-weight block route = quotient route, p={p}, n={n}, d<=6", sym_bad)
    res.notes.append(f"dualized form dual(coker) = kappa(e, d): "
                     f"{len(literal_bad)}/{len(_cells(max))} cells disagree")
    return res


# Prim polynomials --------------------------------------------------------------

def suite_prim7() -> SuiteResult:
    res = SuiteResult("prim7", GOLDEN)
    g = golden()["prim7"]
    got = prim_char(g["m"] - 1, g["m"], g["p"], g["n"])
    res.add("Prim(7), n=4, p=3 matches the golden orbits", [] if got == prim7_character() else [7])
    res.add("coefficient 3 at (3,3,3,3)", [] if got.coefficient((3, 3, 3, 3)) == 3 else [got.coefficient((3, 3, 3, 3))])
    return res


def suite_nim_table(p: int = 5, n: int = 4, max_m: int | None = None,
                 cache: KernelCache | None = None) -> SuiteResult:
    res = SuiteResult("nim-table", GOLDEN)
    t = table1()
    if (p, n) != (t["p"], t["n"]):
        raise ValueError(f"the shipped table is for p={t['p']}, n={t['n']}")
    bad = []
    for row in t["rows"]:
        m = row["m"]
        if max_m is not None and m > max_m:
            continue
        if cached_prim(m - 1, m, p, n, cache) != table1_character(row, p):
            bad.append(row["m_base5"])
    res.add(f"reference-table rows{'' if max_m is None else f' m<={max_m}'} = Prim(m)", bad)
    return res


def suite_conj_prim_nim(p: int = 2, n: int = 3, max_m: int = 20) -> SuiteResult:
    """Prim against even-carry (n = 3) and Nim (p = 2) polynomials."""
    res = SuiteResult("conj-prim-nim", CONJECTURE)
    if n == 3:
        bad, literal = [], []
        for m in range(1, max_m + 1):
            prim = prim_char(m - 1, m, p, 3)
            if prim != even_carry_poly(m, p).dual():
                bad.append(m)
            if prim != even_carry_poly(m, p):
                literal.append(m)
        res.add(f"Prim(m) = C_p(m)^dual, n=3, p={p}, m<={max_m}", bad)
        res.notes.append(f"undualized Prim(m) = C_p(m) fails for m in {literal}")
    if p == 2:
        top = max_m if n != 3 else (max_m - 1) // 2
        zero, odd, literal = [], [], []
        for m in range(0, top + 1):
            if m >= 1 and prim_char(2 * m - 1, 2 * m, 2, n):
                zero.append(m)
            prim = prim_char(2 * m, 2 * m + 1, 2, n)
            if prim != nim_poly(n, m).frobenius(1, 2):
                odd.append(m)
            if prim != nim_poly(n, m):
                literal.append(m)
        res.add(f"Prim(2m) = 0, p=2, n={n}, m<={top}", zero)
        res.add(f"Prim(2m+1) = F(N_n(m)), p=2, n={n}, m<={top}", odd)
        res.notes.append(f"untwisted Prim(2m+1) = N_n(m) fails for m in {literal}")
    if not res.checks:
        raise ValueError("conj-prim-nim needs n = 3 or p = 2")
    return res


def suite_conj_prim_vanishing(p: int = 2, n: int = 3, max_sum: int = 20) -> SuiteResult:
    res = SuiteResult("conj-prim-vanishing", CONJECTURE)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        found = vanishing_scan(max_sum, p, n)
        frob_only = vanishing_scan(max_sum, p, n, span="frobenius")
    res.add(f"K^prim(d,e) = 0 off d = e-1, d+e<={max_sum}, p={p}, n={n}",
            [(d, e) for d, e, _ in found])
    res.notes.append("quotient by R_+ K + R F_K(K); with R F_K(K) alone the nonzero cells are "
                     f"{[(d, e) for d, e, _ in frob_only]}")
    return res


# tiles --------------------------------------------------------------------------

def suite_tiles(p: int = 5) -> SuiteResult:
    res = SuiteResult("tiles", CONJECTURE)
    corrected = builtin_tileset(3, p, corrected=True)
    literal = builtin_tileset(3, p)
    bad, lit_bad = [], []
    for m in range(1, p ** 3):
        target = even_carry_poly(m, p).dual()
        if tile_sum(corrected, m, p, 3) != target:
            bad.append(m)
        if tile_sum(literal, m, p, 3) != target:
            lit_bad.append(m)
    res.add(f"n=3 tile sum = C_p(m)^dual, m < p^3, p={p}", bad)
    res.notes.append(f"n=3 tiles with the printed k-ranges fail for m in {lit_bad[:10]}"
                     f"{'...' if len(lit_bad) > 10 else ''} ({len(lit_bad)} values)")
    if p == 5:
        tiles4 = builtin_tileset(4, 5)
        rows = {r["m"]: r for r in table1()["rows"]}
        bad = []
        for m in range(1, 25):
            d1, d0 = divmod(m, 5)
            formula = nim_formula_two_digit(d1, d0, 5)
            if tile_sum(tiles4, m, 5, 4) != formula or (m in rows and formula != table1_character(rows[m])):
                bad.append(m)
        res.add("n=4 tile sum = six-term formula = reference table, two-digit m, p=5", bad)
    elif p == 3:
        tiles4 = builtin_tileset(4, 3)
        off = [m for m in range(1, 11) if tile_sum(tiles4, m, 3, 4) != prim_char(m - 1, m, 3, 4)]
        res.notes.append(f"n=4 tiles at p=3 against Prim(m), m<=10: disagree for m in {off}")
    res.add("END tiles for n=6, c=2 reproduce the table",
            [] if families_equal_symbolic(end_tiles(6, None, 2), table_families("n6_cout2_end")) else ["mismatch"])
    return res


# kappa conjectures ---------------------------------------------------------------

def suite_gao(n: int = 3, max: int = 31) -> SuiteResult:
    res = SuiteResult("gao", CONJECTURE)
    bad, literal = [], []
    reading = GaoReading()
    for d, e in _cells(max):
        oracle = kappa_oracle(d, e, 2, n)
        if kappa_gao_p2(d, e, n, reading) != oracle:
            bad.append((d, e))
        if kappa_gao_p2(d, e, n, LITERAL_GAO) != oracle:
            literal.append((d, e))
    res.add(f"Gao formula = oracle, p=2, n={n}, d<={max} (order={reading.order}, shift={reading.shift})", bad)
    res.notes.append(f"printed reading (order=literal, shift=minus): "
                     f"{len(literal)}/{len(_cells(max))} cells disagree")
    return res


def general_form_P(p: int, n: int, literal: bool = False) -> Callable[[int, int], Character]:
    """P_i(m) used for the general formula: p_poly_p2 when p = 2, else P_0 = C_p^dual (n = 3)."""
    if p == 2:
        return lambda i, m: p_poly_p2(i, m, n, twist=not literal)
    if n != 3:
        raise ValueError("P_i(m) is only known for p = 2 or n = 3")
    if literal:
        return lambda i, m: even_carry_poly(m, p)
    return lambda i, m: even_carry_poly(m, p).dual()


def suite_general_form(p: int = 3, n: int = 3, max: int = 20) -> SuiteResult:
    res = SuiteResult("general-form", CONJECTURE)
    cells = _cells(max)
    table = {(d, e): kappa_oracle(d, e, p, n) for d, e in cells}
    report = kappa_general_form_check(table, general_form_P(p, n), p, n, cells)
    res.add(f"general formula = oracle, p={p}, n={n}, d<={max}", report.failures())
    lit = kappa_general_form_check(table, general_form_P(p, n, literal=True), p, n, cells)
    what = "untwisted N_n" if p == 2 else "P_0 = C_p"
    res.notes.append(f"with {what}: {len(lit.failures())}/{len(cells)} cells disagree")
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "n3-threeway": suite_n3_threeway,
    "nim": suite_nim,
    "even-carry": suite_even_carry,
    "nim-even-carry": suite_nim_even_carry,
    "trunc": suite_trunc,
    "known-cases": suite_known_cases,
    "exact-seq": suite_exact_seq,
    "prim7": suite_prim7,
    "nim-table": suite_nim_table,
    "conj-prim-nim": suite_conj_prim_nim,
    "conj-prim-vanishing": suite_conj_prim_vanishing,
    "tiles": suite_tiles,
    "gao": suite_gao,
    "general-form": suite_general_form,
}


def run_suite(name: str, **params) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](**params)
