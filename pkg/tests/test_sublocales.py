import pytest
from hypothesis import given, settings

from pointfree.errors import SizeCapExceeded
from pointfree.order import chain
from pointfree.sublocales import (
    SublocaleLattice, boolean_sl, brute_force_sublocales, closed_sl, coker, enumerate_sublocales,
    is_d_sublocale, is_exact_sublocale, ker, open_sl, smallest_sublocale,
)

from conftest import downset_frames


def test_three_chain_sublocales(chain3):
    # bottom = bit 0, m = bit 1, top = bit 2
    assert enumerate_sublocales(chain3) == [0b100, 0b101, 0b110, 0b111]


def test_two_element_frame(two):
    assert len(enumerate_sublocales(two)) == 2


def test_diamond_sublocale_count_regression(diamond):
    assert len(brute_force_sublocales(diamond)) == 4


def test_open_and_closed_extremes(chain3):
    L = chain3
    assert open_sl(L, L.top) == 0b111 and open_sl(L, L.bottom) == 0b100
    assert closed_sl(L, L.bottom) == 0b111 and closed_sl(L, L.top) == 0b100
    assert open_sl(L, 1) == 0b101


def test_smallest_sublocale_examples(chain3):
    L = chain3
    assert smallest_sublocale(L, 0b100) == 0b100
    assert smallest_sublocale(L, 0b010) == 0b110 == boolean_sl(L, 1)
    assert smallest_sublocale(L, 0b111) == 0b111


def test_ker_and_coker_basics(diamond):
    L = diamond
    for a in range(L.n):
        assert ker(L, open_sl(L, a)) == L.up[a]
        assert coker(L, closed_sl(L, a)) == L.up[a]
    assert ker(L, 1 << L.top) == 0b1111


def test_exact_examples(chain3):
    L = chain3
    for a in range(L.n):
        assert is_exact_sublocale(L, open_sl(L, a)) and is_exact_sublocale(L, closed_sl(L, a))
    for p in L.covered_primes():
        assert is_exact_sublocale(L, boolean_sl(L, p))


def test_cap():
    with pytest.raises(SizeCapExceeded):
        enumerate_sublocales(chain(13))
    assert len(enumerate_sublocales(chain(13), cap=None)) == 2 ** 12


@settings(max_examples=40, deadline=None)
@given(downset_frames())
def test_enumeration_matches_brute_force(L):
    assert enumerate_sublocales(L, cap=None) == brute_force_sublocales(L)


@settings(max_examples=40, deadline=None)
@given(downset_frames())
def test_sublocale_lattice_is_a_boolean_coframe(L):
    S = SublocaleLattice(L, cap=None)
    assert S.is_coframe()
    assert len(S) == 2 ** len(L.primes())
    assert all(S.complement(T) is not None for T in S.carriers)
    for T in S.carriers:
        for U in S.carriers:
            assert S.join(T, U) == S.join_by_intersection(T, U)


@settings(max_examples=40, deadline=None)
@given(downset_frames())
def test_all_finite_sublocales_are_exact_and_d(L):
    S = SublocaleLattice(L, cap=None)
    assert all(is_exact_sublocale(L, T) and is_d_sublocale(L, T) for T in S.carriers)
