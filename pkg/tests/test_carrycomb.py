import pytest
from hypothesis import given
from hypothesis import strategies as st

from evencarry.carrycomb import (carry_sequence, digits, even_carry_poly, even_carry_poly_digits,
                                 is_even_carry, nim_poly)
from evencarry.charring import Character
from evencarry.schur import complete


def test_carry_examples():
    assert carry_sequence([1, 1, 1, 1], 3) == (1,)
    assert carry_sequence([0, 0, 0, 1], 7) == ()
    for p in (2, 3, 5, 10):
        assert carry_sequence([p - 1, 1], p) == (1,)
    assert carry_sequence([9, 9, 9], 10) == (2,)


def test_carry_errors():
    with pytest.raises(ValueError):
        carry_sequence([1], 1)
    with pytest.raises(ValueError):
        carry_sequence([-1, 2], 3)


@given(st.lists(st.integers(0, 200), max_size=5), st.sampled_from([2, 3, 5, 7]))
def test_carries_match_digit_simulation(a, p):
    # schoolbook addition, column by column
    carries, carry, col = [], 0, 0
    width = max([len(digits(x, p)) for x in a] + [1]) + 3
    for col in range(width):
        s = carry + sum(x // p ** col % p for x in a)
        carry = s // p
        carries.append(carry)
    while carries and carries[-1] == 0:
        carries.pop()
    assert carry_sequence(a, p) == tuple(carries)


def test_even_carry_examples():
    assert is_even_carry([0, 0, 0, 1], 5)
    assert not is_even_carry([1, 1, 1, 1], 3)
    assert not is_even_carry([1, 1], 2)


@given(st.lists(st.integers(0, 60), min_size=1, max_size=4))
def test_p2_even_carry_means_no_carries(a):
    if is_even_carry(a, 2):
        assert carry_sequence(a, 2) == ()


def test_digits():
    assert digits(0, 3) == []
    assert digits(11, 5) == [1, 2]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_even_carry_small_and_zero(p):
    assert not even_carry_poly(0, p)
    for m in range(1, p):
        assert even_carry_poly(m, p) == complete(m - 1, 3)
        assert even_carry_poly_digits(m, p) == complete(m - 1, 3)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_digit_formula_matches_enumeration(p):
    for m in range(1, p ** 3):
        assert even_carry_poly_digits(m, p) == even_carry_poly(m, p), m


def test_p3_m4_digit_patterns():
    # digits (1, 1): only c_1 = 0 survives, giving s_0 * F(s_1)... evaluated directly
    assert even_carry_poly_digits(4, 3) == even_carry_poly(4, 3)
    assert even_carry_poly(4, 3) == complete(1, 3).frobenius(1, 3)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_even_carry_symmetric_multiplicity_free(p):
    for m in range(1, 40):
        c = even_carry_poly(m, p)
        assert c.is_symmetric()
        assert set(c.terms.values()) <= {1}


def test_p2_even_carry_vs_nim():
    for m in range(40):
        assert not even_carry_poly(2 * m, 2)
        assert even_carry_poly(2 * m + 1, 2) == nim_poly(3, m).dual().frobenius(1, 2)


def test_nim_examples():
    assert nim_poly(3, 0) == Character.one(3)
    assert nim_poly(3, 1) == Character.orbit_sum((1, 1, 0))
    assert nim_poly(3, 2) == Character.orbit_sum((2, 2, 0))
    assert len(nim_poly(3, 2)) == 3
    assert not nim_poly(4, -1)


@given(st.integers(3, 5), st.integers(0, 6))
def test_nim_symmetric(n, m):
    assert nim_poly(n, m).is_symmetric()
