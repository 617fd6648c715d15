import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import SMALL, TINY
from latenv import corpus
from latenv.admissible import join_admissible_masks
from latenv.errors import SizeExceeded
from latenv.finlat import LatticeMap, bits, enumerate_lattices
from latenv.morphisms import FLAGS, classify_map, describe_witness, enumerate_maps

FOUR = enumerate_lattices(4)


def all_maps(L1, L2):
    for table in itertools.product(range(L2.n), repeat=L1.n):
        yield LatticeMap(L1, L2, table)


def test_transport_f_is_a_homomorphism_that_breaks_transport():
    f = corpus.transport_f()
    c = classify_map(f)
    assert c.homomorphism and c.injective and not c.surjective
    assert not c.sends_join_admissible_to_join_admissible
    w = c.witnesses["sends_join_admissible_to_join_admissible"]
    assert describe_witness(f, w) == "{a1,b1}"
    assert describe_witness(f, c.witnesses["surjective"], "surjective") == "{c2}"
    assert not c.admissible_homomorphism and not c.wedge_avee


def test_identity_has_every_flag(m3):
    c = classify_map(LatticeMap.identity(m3))
    assert all(c.flags().values())


def test_constant_map_fails_bounds(m3):
    c = classify_map(LatticeMap(m3, m3, (m3.top,) * m3.n))
    assert c.monotone and not c.join_preserving and c.witnesses["join_preserving"] == ("bottom",)


def test_sampled_classification_is_flagged():
    K = corpus.k_truncation(3, 2)
    c = classify_map(LatticeMap.identity(K), cap=6, samples=200)
    assert c.sampled and c.homomorphism


@pytest.mark.parametrize("flag", ["homomorphism", "monotone", "meets_and_admissible_joins",
                                  "joins_and_admissible_meets", "wedge_avee",
                                  "admissible_homomorphism", "surjective"])
def test_enumeration_matches_brute_force(flag):
    for L1 in FOUR:
        for L2 in FOUR:
            want = [h.table for h in all_maps(L1, L2) if getattr(classify_map(h), flag)]
            got = [h.table for h in enumerate_maps(L1, L2, flag)]
            assert sorted(got) == sorted(want), (L1.name, L2.name)
            assert len(set(got)) == len(got)


def test_enumeration_by_predicate_and_list():
    L1, L2 = corpus.transport_l1(), corpus.transport_l2()
    homs = enumerate_maps(L1, L2)
    assert corpus.transport_f() in homs
    pred = enumerate_maps(L1, L2, lambda h: h.is_injective())
    assert len(pred) == 5 * 4 * 3 * 2
    both = enumerate_maps(L1, L2, ["homomorphism", "injective"])
    assert all(h.is_injective() for h in both) and corpus.transport_f() in both


def test_enumeration_errors():
    with pytest.raises(ValueError):
        enumerate_maps(corpus.m3(), corpus.m3(), "bogus")
    with pytest.raises(SizeExceeded):
        enumerate_maps(corpus.boolean(3), corpus.boolean(3), "any", cap=1000)


@pytest.mark.parametrize("L1", TINY, ids=lambda L: L.name)
def test_surjections_transport_admissible_sets(L1):
    for L2 in TINY:
        if L2.n > L1.n:
            continue
        adm2 = join_admissible_masks(L2)
        for h in enumerate_maps(L1, L2, ["meets_and_admissible_joins", "surjective"]):
            assert all(h.image(s) in adm2 for s in join_admissible_masks(L1))


@given(st.sampled_from(SMALL), st.sampled_from(SMALL))
def test_homomorphisms_into_distributive_are_admissible(L1, L2):
    if not L2.distributive or L1.n * L2.n > 30:
        return
    for h in enumerate_maps(L1, L2, "homomorphism"):
        assert classify_map(h).admissible_homomorphism


def test_flag_names_are_attributes():
    c = classify_map(LatticeMap.identity(corpus.chain(2)))
    for name in FLAGS:
        assert isinstance(getattr(c, name), bool)
    assert set(bits(5)) == {0, 2}
