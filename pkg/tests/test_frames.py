import pytest
from hypothesis import given, settings, strategies as st

from pointfree.errors import InvalidStructure
from pointfree.frames import (
    EMPTY, NAT, AllNonEmpty, Above, Cof, FiniteFamily, FiniteFrame, StrictlyAbove, cof, element_from_json,
    element_to_json, frame_from_json,
)
from pointfree.order import FiniteLattice, FinitePoset

from conftest import downset_frames

cofs = st.one_of(
    st.just(EMPTY),
    st.frozensets(st.integers(0, 6), max_size=4).map(Cof),
)


def test_meet_of_all_nonempty_is_empty(cofinite):
    assert cofinite.meet_family(AllNonEmpty()) == EMPTY


def test_finite_meets(cofinite, chain3):
    assert cofinite.meet_family(FiniteFamily([cof(1), cof(2)])) == cof(1, 2)
    assert FiniteFrame(chain3).meet_family(FiniteFamily([1])) == 1


def test_exactness_closed_forms(cofinite):
    assert cofinite.is_exact_meet(StrictlyAbove(EMPTY))
    assert cofinite.is_exact_meet(FiniteFamily([cof(4)]))


def test_strong_exactness_definitional(cofinite):
    assert not cofinite.is_strongly_exact_meet(AllNonEmpty())
    assert cofinite.is_strongly_exact_meet(FiniteFamily([cof(1), cof(2)]))
    assert cofinite.is_strongly_exact_meet(StrictlyAbove(cof(1, 2)))


def test_prime_listing(cofinite, chain3, two):
    listing = cofinite.enumerate_primes(3)
    assert list(listing.prefix) == [cof(0), cof(1), cof(2), EMPTY]
    assert not listing.complete
    assert list(FiniteFrame(chain3).enumerate_primes().prefix) == [0, 1]
    assert list(FiniteFrame(two).enumerate_primes().prefix) == [0]


def test_covered_and_maximal_primes(cofinite):
    assert cofinite.is_covered_prime(cof(7))
    assert not cofinite.is_covered_prime(EMPTY)
    assert cofinite.is_maximal_prime(cof(7)) and not cofinite.is_maximal_prime(EMPTY)


def test_finite_covered_primes_are_all_primes(diamond_frame):
    L = diamond_frame
    assert all(L.is_covered_prime(p) for p in L.enumerate_primes().prefix)


def test_finite_frame_requires_distributivity():
    P = FinitePoset.from_relation(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    with pytest.raises(InvalidStructure):
        FiniteFrame(FiniteLattice(P))


def test_json_round_trips(cofinite, diamond_frame):
    assert frame_from_json(cofinite.to_json()) == cofinite
    assert frame_from_json(diamond_frame.to_json()) == diamond_frame
    for a in (EMPTY, NAT, cof(3, 5)):
        assert element_from_json(cofinite, element_to_json(cofinite, a)) == a


def test_above_meets_to_its_base(cofinite):
    assert cofinite.meet_family(Above(cof(2, 3))) == cof(2, 3)


@settings(max_examples=200, deadline=None)
@given(cofs, cofs, cofs)
def test_cofinite_frame_laws(a, b, x):
    from pointfree.frames import CofiniteFrame

    L = CofiniteFrame()
    assert L.meet(a, L.join(b, x)) == L.join(L.meet(a, b), L.meet(a, x))
    assert L.leq(L.meet(x, a), b) == L.leq(x, L.heyting(a, b))
    assert L.leq(a, b) == (L.meet(a, b) == a)


@settings(max_examples=40, deadline=None)
@given(downset_frames())
def test_finite_meets_exact_and_strongly_exact(L):
    F = FiniteFrame(L)
    for a in range(L.n):
        for b in range(L.n):
            fam = FiniteFamily([a, b])
            assert F.is_exact_meet(fam) and F.is_strongly_exact_meet(fam)
