import pytest
from hypothesis import given, settings

from pointfree.errors import InvalidStructure, NotT0
from pointfree.frames import cof
from pointfree.raney import Named
from pointfree.spaces import (
    COFINITE_NAT, COFINITE_NAT_PLUS_GENERIC, FiniteSpace, StarSet, omega_r, parse_space_text,
    space_is_sober, space_is_t1, space_is_td,
)
from pointfree.frames import NatSet

from conftest import posets


def test_sierpinski_specialization_and_saturation():
    X = FiniteSpace.sierpinski()
    assert X.specialization().leq(0, 1) and not X.specialization().leq(1, 0)
    assert X.saturated_sets() == list(X.opens)
    lat, _ = X.upsets_lattice()
    assert lat.n == X.omega().n == 3


def test_discrete_space():
    X = FiniteSpace.discrete(2)
    P = X.specialization()
    assert not P.leq(0, 1) and not P.leq(1, 0)
    assert X.omega().n == 4 and X.upsets_lattice()[0].n == 4


def test_symbolic_specialization():
    assert COFINITE_NAT.specialization() == "antichain on ℕ"
    assert not COFINITE_NAT.specialization_leq(1, 2)
    assert COFINITE_NAT_PLUS_GENERIC.specialization_leq(4, "★")
    assert not COFINITE_NAT_PLUS_GENERIC.specialization_leq("★", 4)


def test_symbolic_saturated_sets():
    assert COFINITE_NAT.is_saturated(NatSet.finite([3]))
    assert COFINITE_NAT_PLUS_GENERIC.is_saturated(StarSet(NatSet.finite()))
    assert not COFINITE_NAT_PLUS_GENERIC.is_saturated(NatSet.finite([3]))


def test_symbolic_points_in_opens():
    assert COFINITE_NAT_PLUS_GENERIC.point_in_open("★", cof(1, 2))
    assert not COFINITE_NAT.point_in_open(1, cof(1, 2))


def test_omega_r_of_cofinite_nat_is_regular_class():
    assert omega_r(COFINITE_NAT).cstar == Named("R")


def test_separation_axioms_of_fixtures():
    assert (space_is_sober(COFINITE_NAT), space_is_td(COFINITE_NAT), space_is_t1(COFINITE_NAT)) == (False, True, True)
    g = COFINITE_NAT_PLUS_GENERIC
    assert (space_is_sober(g), space_is_td(g), space_is_t1(g)) == (True, False, False)
    for X in (COFINITE_NAT, g):
        assert (X.pointset_sober(), X.pointset_td(), X.pointset_t1()) == (space_is_sober(X), space_is_td(X), space_is_t1(X))


def test_rejects_non_topologies():
    with pytest.raises(InvalidStructure):
        FiniteSpace(2, [0, 1, 2])  # missing the union {0,1}


def test_non_t0_has_no_specialization_order():
    with pytest.raises(NotT0):
        FiniteSpace.indiscrete(2).specialization()


def test_space_text_round_trip():
    X = FiniteSpace.sierpinski()
    assert parse_space_text(X.to_text()) == X


@settings(max_examples=40, deadline=None)
@given(posets(4))
def test_finite_t0_spaces_are_sober_and_td(P):
    X = FiniteSpace.alexandrov(P)
    assert X.specialization() == P
    assert sorted(X.saturated_sets()) == sorted(X.opens)
    assert space_is_sober(X) and space_is_td(X)
    assert X.pointset_sober() and X.pointset_td()
    assert space_is_t1(X) == X.pointset_t1() == all(P.up[i] == 1 << i for i in range(P.n))
