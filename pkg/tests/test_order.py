import pytest
from hypothesis import given, settings

from pointfree.errors import InvalidStructure
from pointfree.order import (
    FiniteLattice, FinitePoset, chain, covered_primes, downset_lattice, heyting, parse_poset_text,
    poset_to_text, primes,
)

from conftest import downset_frames, posets


def test_heyting_chain_into_middle_prime(chain3):
    assert heyting(chain3, 2, 1) == 1


def test_heyting_diamond_atoms(diamond):
    assert heyting(diamond, 1, 2) == 2


def test_heyting_self_is_top(diamond, chain3):
    for L in (diamond, chain3):
        assert all(heyting(L, a, a) == L.top for a in range(L.n))


def test_primes_small_frames(two, chain3, diamond):
    assert primes(chain3) == {0, 1}
    assert primes(two) == {0}
    assert primes(diamond) == {1, 2}


def test_covered_primes_small_frames(two, chain3):
    assert covered_primes(chain3) == {0, 1}
    assert covered_primes(two) == {0}


def test_downset_frames_of_tiny_posets():
    assert downset_lattice(FinitePoset.chain(1)).n == 2
    anti = downset_lattice(FinitePoset.antichain(2))
    assert anti.n == 4 and not all(anti.leq(a, b) or anti.leq(b, a) for a in range(4) for b in range(4))
    two_chain = downset_lattice(FinitePoset.chain(2))
    assert two_chain.n == 3 and all(two_chain.leq(a, b) or two_chain.leq(b, a) for a in range(3) for b in range(3))


def test_poset_rejects_cycles():
    with pytest.raises(InvalidStructure):
        FinitePoset([0b11, 0b11])


def test_lattice_json_round_trip(diamond):
    again = FiniteLattice.from_json(diamond.to_json())
    assert again.meet_table == diamond.meet_table and again.heyting_table == diamond.heyting_table


def test_poset_text_round_trip():
    P = FinitePoset.from_relation(4, [(0, 1), (0, 2), (2, 3)])
    assert parse_poset_text(poset_to_text(P)) == P


def test_pentagon_is_not_distributive():
    # 0 < a < c < 1 and 0 < b < 1 with b incomparable to a and c
    P = FinitePoset.from_relation(5, [(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)])
    L = FiniteLattice(P)
    assert not L.distributive
    with pytest.raises(Exception):
        L.heyting(1, 0)


@settings(max_examples=60, deadline=None)
@given(downset_frames())
def test_heyting_adjunction(L):
    for a in range(L.n):
        for b in range(L.n):
            h = L.heyting(a, b)
            for x in range(L.n):
                assert L.leq(L.meet(x, a), b) == L.leq(x, h)


@settings(max_examples=60, deadline=None)
@given(downset_frames())
def test_downset_frames_are_distributive_and_primes_are_covered(L):
    assert L.distributive
    assert covered_primes(L) == primes(L)
    for p in primes(L):
        for x in range(L.n):
            assert L.heyting(x, p) == (L.top if L.leq(x, p) else p)


@settings(max_examples=60, deadline=None)
@given(posets())
def test_downsets_are_downsets(P):
    ds = P.downsets()
    assert len(ds) == len(set(ds))
    assert all(P.is_downset(d) for d in ds)
    assert sum(1 for m in range(1 << P.n) if P.is_downset(m)) == len(ds)


def test_chain_is_a_chain():
    L = chain(5)
    assert all(L.leq(a, b) == (a <= b) for a in range(5) for b in range(5))
