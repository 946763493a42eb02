import pytest
from hypothesis import given, settings

from pointfree.errors import UnsupportedRepresentation
from pointfree.filters import GENERIC, PrimeComplement, Tri, all_filters, shape_of
from pointfree.frames import EMPTY, CofiniteFrame, FiniteFrame
from pointfree.order import boolean_lattice, chain
from pointfree.raney import (
    Explicit, Extension, Named, RaneyExt, Refusal, adjunction_fixpoints, canonical_extension, class_view,
    classifier_map, extend_morphism, frame_maps, identity_map, is_algebraic, is_compact, is_d_morphism,
    is_dense, is_exact_morphism, phi_isomorphism, property_suite, psi_homeomorphism, raney_interval,
    same_class, sobrification, spectrum, td_reflection, unique_extension, validate_raney,
)
from pointfree.spaces import COFINITE_NAT, COFINITE_NAT_PLUS_GENERIC, FiniteSpace, omega_r

from conftest import downset_frames

WINDOW = [str(n) for n in range(16)]


def _statuses(props, keys=("sober", "TD", "T1")):
    return {k: props[k].holds is Tri.TRUE for k in keys}


def test_principal_filters_validate(chain3):
    F = FiniteFrame(chain3)
    assert validate_raney(F, Explicit.from_masks(F, [chain3.up[a] for a in range(3)])).ok


def test_missing_principal_fails(chain3):
    F = FiniteFrame(chain3)
    report = validate_raney(F, Explicit.from_masks(F, [chain3.up[0], chain3.up[2]]))
    assert not report.ok
    assert report["contains-principal"].status == "fail"


def test_cofinite_named_classes(cofinite):
    for name in ("R", "E", "SE", "ICP", "ISO"):
        assert validate_raney(cofinite, Named(name)).ok, name
    # the completely prime filters alone miss the principal filters
    assert not validate_raney(cofinite, Named("CP")).ok


def test_explicit_classes_need_a_finite_frame(cofinite):
    with pytest.raises(UnsupportedRepresentation):
        class_view(cofinite, Explicit([PrimeComplement(EMPTY)]))


def test_every_extension_is_exact_compact():
    for RE in (omega_r(COFINITE_NAT), omega_r(COFINITE_NAT_PLUS_GENERIC), unique_extension(FiniteFrame(chain(4)))):
        assert is_compact(RE, Named("E"))


def test_compactness_for_completely_prime_filters():
    assert not is_compact(omega_r(COFINITE_NAT), Named("CP"))
    assert is_compact(omega_r(COFINITE_NAT_PLUS_GENERIC), Named("CP"))


def test_cofinite_spectra(cofinite):
    assert list(spectrum(RaneyExt(cofinite, Named("E"))).labels) == WINDOW
    assert list(spectrum(RaneyExt(cofinite, Named("SE"))).labels) == WINDOW + ["★"]


def test_finite_exact_spectrum_is_all_primes(diamond_frame):
    sp = spectrum(RaneyExt(diamond_frame, Named("E")))
    assert set(sp.points) == {PrimeComplement(p) for p in diamond_frame.lattice.primes()}


def test_fixture_properties():
    a = property_suite(omega_r(COFINITE_NAT))
    assert _statuses(a, ("sober", "TD", "T1", "subfit")) == {"sober": False, "TD": True, "T1": True, "subfit": True}
    b = property_suite(omega_r(COFINITE_NAT_PLUS_GENERIC))
    assert _statuses(b) == {"sober": True, "TD": False, "T1": False}
    # the infinite checks range over a finite inventory of filters
    assert a["TD"].status == "inventory-verified"


def test_sobrification_and_td_reflection():
    sob = sobrification(omega_r(COFINITE_NAT))
    assert sob.added_points == ("★",) and sob.validation.ok
    assert is_compact(sob.result, Named("CP"))
    assert sobrification(omega_r(COFINITE_NAT_PLUS_GENERIC)).unchanged
    td = td_reflection(omega_r(COFINITE_NAT_PLUS_GENERIC))
    assert td.removed_points == ("★",)
    assert td_reflection(omega_r(COFINITE_NAT)).unchanged


def test_classifier_refused_on_cofinite_nat():
    src = omega_r(COFINITE_NAT)
    two = FiniteFrame(chain(2))
    chi = classifier_map(src.frame, two)
    result = extend_morphism(chi, src, unique_extension(two))
    assert isinstance(result, Refusal)
    assert shape_of(src.frame, result.preimage) == GENERIC
    assert not is_exact_morphism(chi)


def test_classifier_extends_with_generic_point():
    src = omega_r(COFINITE_NAT_PLUS_GENERIC)
    two = FiniteFrame(chain(2))
    result = extend_morphism(classifier_map(src.frame, two), src, unique_extension(two))
    assert isinstance(result, Extension) and result.verified


def test_identity_extends():
    for RE in (omega_r(COFINITE_NAT), unique_extension(FiniteFrame(boolean_lattice(2)))):
        result = extend_morphism(identity_map(RE.frame), RE, RE)
        assert isinstance(result, Extension) and result.verified
        assert all(a == b for a, b in result.mapping)
    assert is_exact_morphism(identity_map(CofiniteFrame()))


def test_canonical_extension_of_the_diamond(diamond_frame):
    canon, report = canonical_extension(diamond_frame)
    assert report.ok
    assert same_class(diamond_frame, canon.cstar, unique_extension(diamond_frame).cstar)
    assert same_class(diamond_frame, canon.cstar, Named("R"))


def test_non_boolean_canonical_extension_differs_from_regular(chain3):
    F = FiniteFrame(chain3)
    canon, _ = canonical_extension(F)
    assert same_class(F, canon.cstar, unique_extension(F).cstar)
    assert not same_class(F, canon.cstar, Named("R"))


def test_three_chain_properties(chain3):
    props = property_suite(unique_extension(FiniteFrame(chain3)))
    assert _statuses(props) == {"sober": True, "TD": True, "T1": False}


def test_sierpinski_duality():
    X = FiniteSpace.sierpinski()
    assert psi_homeomorphism(X)
    assert phi_isomorphism(omega_r(X))


def test_raney_json_round_trip(cofinite, diamond_frame):
    for RE in (RaneyExt(cofinite, Named("SE")), unique_extension(diamond_frame)):
        again = RaneyExt.from_json(RE.to_json())
        assert same_class(RE.frame, again.cstar, RE.cstar)


@settings(max_examples=30, deadline=None)
@given(downset_frames(3))
def test_finite_frames_have_one_extension(L):
    F = FiniteFrame(L)
    RE = unique_extension(F)
    assert raney_interval(F) == [frozenset(all_filters(L))]
    assert adjunction_fixpoints(RE)
    assert is_algebraic(RE)
    assert is_dense(RE, Named("E"))
    assert sobrification(RE).unchanged and td_reflection(RE).unchanged
    props = property_suite(RE)
    assert props["sober"] and props["TD"]
    assert bool(props["T1"]) == L.is_boolean()
    assert phi_isomorphism(RE)


@settings(max_examples=20, deadline=None)
@given(downset_frames(2), downset_frames(2))
def test_finite_frame_maps_extend(L, M):
    src, tgt = FiniteFrame(L), FiniteFrame(M)
    for f in frame_maps(src, tgt):
        result = extend_morphism(f, unique_extension(src), unique_extension(tgt))
        assert isinstance(result, Extension) and result.verified
        assert is_exact_morphism(f) and is_d_morphism(f)
