from hypothesis import given, settings, strategies as st

from pointfree.corpus import canonical_form, corpus_frames, posets_of_size, topologies
from pointfree.order import FinitePoset

from conftest import posets


def test_poset_counts_up_to_isomorphism():
    assert [len(posets_of_size(n)) for n in range(1, 6)] == [1, 2, 5, 16, 63]


def test_labelled_topology_counts():
    assert [len(topologies(n)) for n in range(1, 4)] == [1, 4, 29]


def test_corpus_is_small_enough():
    frames = corpus_frames(5)
    assert len(frames) == 87
    assert max(c.lattice.n for c in frames) == 32


@settings(max_examples=80, deadline=None)
@given(posets(5), st.randoms(use_true_random=False))
def test_canonical_form_is_relabelling_invariant(P, rnd):
    perm = list(range(P.n))
    rnd.shuffle(perm)
    up = [0] * P.n
    for old in range(P.n):
        up[perm[old]] = sum(1 << perm[j] for j in range(P.n) if P.up[old] >> j & 1)
    assert canonical_form(FinitePoset(up)) == canonical_form(P)
