import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from evencarry.carrycomb import even_carry_poly, nim_poly
from evencarry.charring import Character
from evencarry.formulas import kappa_char0, trunc_schur2
from evencarry.oracle import (check_in_kernel, cokernel_char, frobenius_cycle, kappa_oracle,
                              kernel_basis, monomial_mult, prim_char, prim_poly, vanishing_scan,
                              weight_block)
from evencarry.oracle.blocks import (box_slice, cokernel_dim_block, cokernel_dim_quotient,
                                     compositions, kernel_dim_block, kernel_dim_quotient)
from evencarry.oracle.cache import CacheMismatch, KernelCache, cached_kappa, cached_prim
from evencarry.oracle.linalg import Echelon, nullspace_mod_p, rank_mod_p
from evencarry.oracle.prim import basis_elements, element_bidegree, omega_apply

ONE = Character.one(3)
GEN = {((0, 0, 0), (0, 0, 0)): 1}


# linear algebra ------------------------------------------------------------

@given(st.integers(1, 6), st.integers(1, 6), st.sampled_from([2, 3, 5, 7]), st.data())
def test_rank_nullity(r, c, p, data):
    mat = np.array(data.draw(st.lists(st.lists(st.integers(0, p - 1), min_size=c, max_size=c),
                                      min_size=r, max_size=r)), dtype=np.int64)
    ns = nullspace_mod_p(mat, p)
    assert rank_mod_p(mat, p) + ns.shape[0] == c
    assert not ((mat @ ns.T) % p).any()
    ech = Echelon(c, p)
    for row in mat:
        ech.add(row)
    assert ech.rank == rank_mod_p(mat, p)


# weight blocks ---------------------------------------------------------------

def test_weight_block_examples():
    b = weight_block(1, 0, (1, 0, 0), 2)
    assert b.matrix().tolist() == [[1]]
    assert weight_block(0, 2, (1, 1, 0), 3).entries == ()
    b = weight_block(1, 1, (1, 1, 0), 2)
    assert b.matrix().shape == (1, 2)
    assert b.matrix().tolist() == [[1, 1]]
    with pytest.raises(ValueError):
        weight_block(1, 1, (1, 0, 0), 2)


def test_box_slice():
    assert box_slice((1, 2), 2) == [(0, 2), (1, 1)]


@given(st.integers(0, 6), st.integers(1, 6), st.sampled_from([2, 3, 5]), st.data())
def test_kernel_routes_agree(d, e, p, data):
    u = data.draw(st.sampled_from(list(compositions(d + e - 1, 3))))
    assert kernel_dim_quotient(d, e, u, p) == kernel_dim_block(d, e, u, p)
    assert cokernel_dim_quotient(d, e, u, p) == cokernel_dim_block(d, e, u, p)


def test_kappa_examples():
    assert kappa_oracle(0, 1, 5, 3) == ONE
    assert not kappa_oracle(1, 1, 2, 3)
    k = kappa_oracle(1, 2, 2, 3)
    assert k == Character.orbit_sum((1, 1, 0)) == trunc_schur2(0, 0, 2, 3).scale(0) + kappa_char0(1, 2, 3)
    assert len(k) == 3


@pytest.mark.parametrize("p,n", [(2, 3), (3, 3), (2, 4)])
def test_kappa_symmetric_with_correct_degree(p, n):
    for d in range(0, 7):
        for e in range(1, 7):
            full = kappa_oracle(d, e, p, n, method="block", full=True)
            assert full.is_symmetric()
            assert full == kappa_oracle(d, e, p, n)
            if full:
                assert all(sum(t) <= d + e - 1 for t in full.terms)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_small_e_is_characteristic_zero(p):
    for e in range(1, p):
        for d in range(0, 12):
            assert kappa_oracle(d, e, p, 3) == kappa_char0(d, e, 3)


def test_cokernel_examples():
    assert not cokernel_char(0, 3, 2, 3)
    assert not cokernel_char(1, 1, 2, 3)


def test_cokernel_matches_swapped_kernel():
    for p in (2, 3):
        for d in range(1, 9):
            for e in range(1, d + 1):
                assert cokernel_char(d, e, p, 3) == kappa_oracle(e, d, p, 3)


# kernel bases and the Frobenius cycle map ---------------------------------------

def test_kernel_basis_examples():
    b = kernel_basis(1, 2, (1, 1, 0), 2)
    assert basis_elements(b) == [{((1, 0, 0), (0, 1, 0)): 1, ((0, 1, 0), (1, 0, 0)): 1}]
    assert kernel_basis(1, 1, (1, 0, 0), 2).vectors.shape[0] == 0
    g = kernel_basis(0, 1, (0, 0, 0), 3)
    assert basis_elements(g) == [GEN]


def test_kernel_basis_is_killed_by_omega():
    for u in [(2, 1, 1), (1, 2, 1), (1, 1, 2), (3, 1, 0), (0, 1, 3)]:
        for el in basis_elements(kernel_basis(3, 2, u, 2)):
            assert check_in_kernel(el, 2)
            assert element_bidegree(el) == (3, 2)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_frobenius_cycle_of_generator(p):
    n = 3
    img = frobenius_cycle(GEN, p, n)
    assert img
    assert check_in_kernel(img, p)
    assert element_bidegree(img) == ((p - 1) * (n - 1), p)


def test_frobenius_cycle_general():
    els = basis_elements(kernel_basis(1, 2, (1, 1, 0), 2))
    img = frobenius_cycle(els[0], 2, 3)
    assert check_in_kernel(img, 2)
    assert element_bidegree(img) == (4, 4)
    assert kappa_oracle(4, 4, 2, 3)
    assert frobenius_cycle({}, 3, 3) == {}
    with pytest.raises(ValueError):
        frobenius_cycle({((1, 0, 0), (0, 0, 0)): 1}, 2, 3)


def test_monomial_mult():
    el = basis_elements(kernel_basis(1, 2, (1, 1, 0), 2))[0]
    assert monomial_mult(el, (0, 0, 0), (0, 0, 0), 2) == el
    assert monomial_mult(el, (2, 0, 0), (0, 0, 0), 2) == {}
    assert monomial_mult(GEN, (1, 0, 0), (0, 0, 0), 3) == {}
    moved = monomial_mult(el, (0, 0, 0), (0, 0, 1), 2)
    assert element_bidegree(moved) == (1, 3) and check_in_kernel(moved, 2)


def test_omega_power():
    v = {((2, 0, 0), (0, 0, 0)): 1}
    assert omega_apply(omega_apply(v, 3), 3) == {((0, 0, 0), (2, 0, 0)): 1}


# Prim ------------------------------------------------------------------------------

def test_prim_examples():
    assert prim_char(0, 1, 2, 3) == ONE
    assert prim_poly(1, 5, 4) == Character.one(4)
    with pytest.raises(ValueError):
        prim_poly(0, 2, 3)
    with pytest.raises(ValueError):
        prim_char(1, 2, 2, 3, span="everything")


def test_prim7_has_coefficient_three():
    prim = prim_poly(7, 3, 4)
    assert prim.coefficient((3, 3, 3, 3)) == 3
    assert prim.is_symmetric()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_prim_n3_is_dual_even_carry(p):
    for m in range(1, 11):
        assert prim_poly(m, p, 3) == even_carry_poly(m, p).dual()


def test_prim_p2_nim():
    for n in (3, 4):
        for m in range(0, 4):
            if m:
                assert not prim_poly(2 * m, 2, n)
            assert prim_poly(2 * m + 1, 2, n) == nim_poly(n, m).frobenius(1, 2)


def test_spans_agree_on_the_diagonal_but_not_off_it():
    for m in range(1, 8):
        assert prim_poly(m, 3, 3, "frobenius") == prim_poly(m, 3, 3, "minimal")
    # z K(0,1) = K(0,2) has no Frobenius preimage for p = 3
    assert prim_char(0, 2, 3, 3, "frobenius")
    assert not prim_char(0, 2, 3, 3, "minimal")


def test_vanishing_scan_small():
    assert vanishing_scan(10, 2, 3) == []
    with pytest.warns(UserWarning):
        found = vanishing_scan(4, 3, 3, span="frobenius")
    assert (0, 2) in [(d, e) for d, e, _ in found]


# cache ------------------------------------------------------------------------------

def test_cache_round_trip(cache_dir):
    cache = KernelCache(cache_dir)
    first = cached_prim(6, 7, 3, 4, cache)
    files = sorted(p.name for p in cache_dir.rglob("*.json"))
    assert files
    assert cached_prim(6, 7, 3, 4, cache) == first == prim_poly(7, 3, 4)
    assert cached_prim(6, 7, 3, 4, cache, recompute=True) == first
    assert cached_kappa(3, 3, 3, 4, cache) == kappa_oracle(3, 3, 3, 4)
    assert cached_kappa(3, 3, 3, 4, None) == kappa_oracle(3, 3, 3, 4)


def test_cache_is_write_once(cache_dir):
    cache = KernelCache(cache_dir)
    cache.put("kernel", 2, 3, 4, 4, {(2, 1, 0): 1})
    cache.put("kernel", 2, 3, 4, 4, {(2, 1, 0): 1})
    with pytest.raises(CacheMismatch):
        cache.put("kernel", 2, 3, 4, 4, {(2, 1, 0): 2})


def test_cache_detects_tampering(cache_dir):
    cache = KernelCache(cache_dir)
    cached_kappa(2, 2, 2, 3, cache)
    path = cache.path("kernel", 2, 3, 2, 2)
    obj = json.loads(path.read_text())
    obj["weights"][0]["dim"] += 1
    path.write_text(json.dumps(obj))
    with pytest.raises(CacheMismatch):
        cached_kappa(2, 2, 2, 3, cache, recompute=True)
    obj["schema"] = "other/9"
    path.write_text(json.dumps(obj))
    with pytest.raises(CacheMismatch):
        cache.get("kernel", 2, 3, 2, 2)


def test_cache_from_env(cache_dir, monkeypatch):
    assert KernelCache.from_env() is None
    monkeypatch.setenv("EVENCARRY_CACHE_DIR", str(cache_dir))
    assert KernelCache.from_env().root == cache_dir
