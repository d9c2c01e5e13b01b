import json

import pytest
from click.testing import CliRunner

from evencarry.charring import Character
from evencarry.cli import main


@pytest.fixture
def run(monkeypatch):
    monkeypatch.delenv("EVENCARRY_CACHE_DIR", raising=False)
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(main, list(map(str, args)))

    return invoke


def test_kappa_all_methods_agree(run):
    res = run("kappa", "--p", 2, "--n", 3, "--d", 2, "--e", 2, "--method", "all")
    assert res.exit_code == 0, res.output
    obj = json.loads(res.output)
    assert obj["schema"] == "evencarry.kappa-table/1"
    assert obj["agreement"]["all_agree"]
    methods = {e["method"] for e in obj["entries"]}
    assert {"oracle", "oracle-block", "recurrence", "even-carry", "nim", "gao"} == methods
    for e in obj["entries"]:
        assert Character.from_dict(e["character"]) == Character.one(3)


def test_kappa_agreement_report_text(run):
    res = run("kappa", "--p", 5, "--n", 3, "--d", 7, "--e", 5, "--method", "even-carry,oracle",
              "--format", "text")
    assert res.exit_code == 0
    assert "methods agree" in res.output


def test_kappa_disagreement_exits_nonzero(run):
    res = run("kappa", "--p", 2, "--d", 2, "--e", 2, "--method", "oracle,char0")
    assert res.exit_code == 1
    assert json.loads(res.output)["agreement"]["disagreements"] == [[2, 2]]


def test_kappa_errors(run):
    assert run("kappa", "--p", 4, "--d", 1, "--e", 1).exit_code != 0
    assert run("kappa", "--p", 3, "--n", 4, "--d", 1, "--e", 1, "--method", "recurrence").exit_code != 0
    assert run("kappa", "--p", 3, "--d", 1, "--e", 1, "--method", "gao").exit_code != 0
    assert run("kappa", "--p", 3, "--d", 1).exit_code != 0
    assert run("kappa", "--p", 3, "--n", 4, "--d", 2, "--e", 1, "--format", "triangle").exit_code != 0


def test_kappa_table_and_triangle(run):
    res = run("kappa", "--p", 3, "--max", 4)
    assert len(json.loads(res.output)["entries"]) == 10
    res = run("kappa", "--p", 3, "--d", 4, "--e", 3, "--format", "triangle")
    assert res.exit_code == 0 and res.output.strip() == "1"


def test_prim7(run, tmp_path):
    args = ("prim", "--p", 3, "--n", 4, "--m", 7, "--cache-dir", tmp_path)
    first = run(*args)
    assert first.exit_code == 0
    again = run(*args)
    assert again.output == first.output
    assert run(*args, "--recompute").output == first.output
    assert list(tmp_path.rglob("*.json"))
    text = run("prim", "--p", 3, "--n", 4, "--m", 7, "--format", "text").output.strip()
    assert text == "1*m(6,6,0,0) + 1*m(6,3,3,0) + 1*m(4,4,4,0) + 1*m(4,4,3,1) + 3*m(3,3,3,3)"


def test_prim_span_option(run):
    args = ("prim", "--p", 3, "--n", 3, "--d", 0, "--e", 2, "--format")
    assert run(*args, "text").output.strip() == "0"
    assert run(*args, "text", "--span", "frobenius").output.strip() == "1*m(1,0,0)"
    assert json.loads(run(*args, "json").output)["span"] == "minimal"


def test_prim_errors(run):
    assert run("prim", "--p", 6, "--n", 4, "--m", 2).exit_code != 0
    assert run("prim", "--p", 3, "--n", 4, "--m", 0).exit_code != 0
    assert run("prim", "--p", 3, "--n", 4).exit_code != 0


def test_evencarry_nim_ms(run):
    obj = json.loads(run("evencarry", "--p", 5, "--m", 3).output)
    assert len(obj["character"]["terms"]) == 6
    obj = json.loads(run("nim", "--n", 3, "--m", 2).output)
    assert [t["exp"] for t in obj["character"]["terms"]] == [[0, 2, 2], [2, 0, 2], [2, 2, 0]]
    res = run("ms", "--p", 5, "--rows", "1,0/1,0/0,0/0,0", "--format", "text")
    assert res.output.strip() == "1*m(5,5,0,0)"
    assert run("ms", "--p", 5, "--rows", "7/0/0").exit_code != 0
    assert run("ms", "--p", 5, "--rows", "a/0/0").exit_code != 0


def test_tiles_cmd(run):
    res = run("tiles", "--p", 5, "--n", 4, "--m", 16, "--sequences")
    obj = json.loads(res.output)
    assert obj["schema"] == "evencarry.tiles/1" and len(obj["sequences"]) == 6
    assert run("tiles", "--p", 3, "--n", 5, "--m", 3).exit_code != 0


def test_verify(run):
    res = run("verify", "--suite", "prim7", "--suite", "nim-even-carry", "--max-m", 10, "--format", "json")
    assert res.exit_code == 0
    obj = json.loads(res.output)
    assert obj["passed"] and [s["suite"] for s in obj["suites"]] == ["prim7", "nim-even-carry"]
    res = run("verify", "--suite", "conj-prim-vanishing", "--p", 2, "--n", 3, "--max-sum", 8)
    assert res.exit_code == 0 and res.output.startswith("PASS [conjecture-check]")
    assert run("verify", "--suite", "even-carry", "--p", 9).exit_code != 0
    assert run("verify", "--suite", "nim-table", "--p", 3, "--n", 4).exit_code != 0


def test_json_is_canonical(run):
    out = run("nim", "--n", 4, "--m", 3).output.strip()
    assert out == json.dumps(json.loads(out), sort_keys=True, separators=(",", ":"))
