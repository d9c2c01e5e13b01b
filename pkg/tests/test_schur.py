import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from evencarry.charring import Character
from evencarry.schur import (complete, elementary, is_prime_power, ms, ms_highest_weight, schur,
                             trunc_schur2, trunc_sym, trunc_sym_via_resolution)


def test_schur_examples():
    assert len(schur((3, 2), 3)) == 12
    assert schur((1, 1, 1), 3) == Character.one(3)
    assert not schur((2, 3), 3)
    assert len(schur((2,), 3)) == 6
    assert schur((), 3) == Character.one(3)


def test_schur_too_many_rows():
    with pytest.raises(ValueError):
        schur((1, 1, 1, 1), 3)
    # trailing zeros do not count as parts
    assert schur((2, 1, 0, 0), 3) == schur((2, 1), 3)


@given(st.lists(st.integers(0, 5), min_size=1, max_size=3).map(lambda v: sorted(v, reverse=True)))
def test_schur_shift_and_padding_invariance(lam):
    n = 4
    base = schur(lam, n)
    padded = tuple(lam) + (0,) * (n - len(lam))
    assert schur(tuple(lam) + (0,), n) == base
    assert schur(tuple(v + 1 for v in padded), n) == base
    assert base.is_symmetric()


@pytest.mark.parametrize("n", [3, 4])
def test_jacobi_trudi_two_rows(n):
    for a in range(13):
        for b in range(a + 1):
            lhs = schur((a, b), n)
            rhs = complete(a, n) * complete(b, n) - complete(a + 1, n) * complete(b - 1, n)
            assert lhs == rhs, (a, b)


def test_dualization_formula_n3():
    for a in range(10):
        for b in range(a + 1):
            assert schur((a, b), 3).dual() == schur((a, a - b), 3)


def test_elementary():
    assert elementary(0, 4) == Character.one(4)
    assert elementary(4, 4) == Character.one(4)
    assert not elementary(5, 4)
    assert elementary(2, 4) == schur((1, 1), 4)


def test_prime_power():
    assert is_prime_power(8, 2) and is_prime_power(1, 5)
    assert not is_prime_power(6, 2)


def test_trunc_sym_examples():
    assert trunc_sym(3, 4, 3) == schur((3,), 3)
    assert not trunc_sym(13, 5, 3)
    assert not trunc_sym(-1, 5, 3)
    assert trunc_sym_via_resolution(3, 4, 3, 2) == schur((3,), 3)
    assert not trunc_sym_via_resolution(-2, 4, 3, 2)
    for n in (3, 4):
        assert trunc_sym(5, 5, n) == schur((5,), n) - complete(1, n).frobenius(1, 5)
    with pytest.raises(ValueError):
        trunc_sym(3, 6, 3, p=2)


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("p,q", [(2, 2), (2, 4), (3, 3), (3, 9), (5, 5)])
def test_trunc_sym_resolution_and_duality(n, p, q):
    top = n * (q - 1)
    for d in range(top + 1):
        assert trunc_sym(d, q, n) == trunc_sym_via_resolution(d, q, n, p)
        assert trunc_sym(d, q, n).dual() == trunc_sym(top - d, q, n)


@given(st.sampled_from([(3, 2), (3, 4), (3, 3), (4, 3), (4, 2)]), st.data())
def test_trunc_schur2_duality(nq, data):
    n, q = nq
    top = n * (q - 1)
    a = data.draw(st.integers(0, top))
    b = data.draw(st.integers(0, top))
    assert trunc_schur2(a, b, q, n).dual() == trunc_schur2(top - b, top - a, q, n)


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_trunc_identity(n, q):
    top = n * (q - 1)
    for ap, b in itertools.product(range(q), repeat=2):
        lhs = trunc_schur2(top - ap, b, q, n)
        assert lhs == schur((ap + b,) + (ap,) * (n - 2), n)
        if n == 3:
            assert lhs == schur((ap + b, ap), 3)


def test_ms_examples():
    assert ms([[0], [0], [0]], 3) == Character.one(3)
    assert ms([[1], [1], [0], [0]], 5) == schur((1, 1), 4)
    assert ms([[1, 0], [1, 0], [0, 0], [0, 0]], 5) == schur((1, 1), 4).frobenius(1, 5)
    assert not ms([[0, 1], [1, 0], [0, 0]], 5)
    with pytest.raises(ValueError):
        ms([[5], [0], [0]], 5)
    with pytest.raises(ValueError):
        ms([[1, 0], [1]], 5)


def test_ms_highest_weight_reads_rows_in_base_p():
    from evencarry.fixtures import table1
    for row in table1()["rows"]:
        for term in row["terms"]:
            rows = term["rows"]
            got = ms(rows, 5)
            if not got:
                continue
            want = tuple(int("".join(map(str, r)), 5) for r in rows)
            assert ms_highest_weight(rows, 5) == want
