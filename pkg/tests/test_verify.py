import pytest

from evencarry.fixtures import golden, prim7_character, table1
from evencarry.verify import CONJECTURE, SUITES, THEOREM, run_suite


def test_registry():
    with pytest.raises(KeyError):
        run_suite("nope")
    assert {"n3-threeway", "nim-table", "conj-prim-vanishing"} <= set(SUITES)


@pytest.mark.parametrize("name,params", [
    ("n3-threeway", {"p": 2, "max": 12}),
    ("nim", {"max_k": 3}),
    ("even-carry", {"p": 3}),
    ("nim-even-carry", {"max_m": 16}),
    ("known-cases", {"p": 3, "n": 4, "max": 10}),
    ("exact-seq", {"p": 3, "n": 3, "max": 8}),
    ("prim7", {}),
    ("nim-table", {"max_m": 8}),
    ("conj-prim-nim", {"p": 3, "n": 3, "max_m": 8}),
    ("conj-prim-vanishing", {"p": 3, "n": 3, "max_sum": 10}),
    ("tiles", {"p": 2}),
    ("gao", {"n": 3, "max": 12}),
    ("general-form", {"p": 3, "n": 3, "max": 10}),
])
def test_suites_pass_small(name, params):
    res = run_suite(name, **params)
    assert res.passed, res.to_dict()
    assert res.kind in (THEOREM, CONJECTURE, "golden")


def test_general_form_n4_p2_reports_failures():
    res = run_suite("general-form", p=2, n=4, max=9)
    assert not res.passed
    (check,) = res.checks
    assert "(8, 8)" in check.detail and "(9, 9)" in check.detail


def test_conj_prim_nim_needs_known_case():
    with pytest.raises(ValueError):
        run_suite("conj-prim-nim", p=3, n=4, max_m=2)


def test_general_form_needs_known_P():
    with pytest.raises(ValueError):
        run_suite("general-form", p=3, n=4, max=2)


def test_fixtures_carry_anchors():
    assert table1()["anchor"] and len(table1()["rows"]) == 20
    g = golden()
    assert all(t["anchor"] for t in g["triangles"]) and g["prim7"]["anchor"]
    assert prim7_character().coefficient((0, 0, 0, 0)) == 3
