import pytest
from hypothesis import given

from conftest import SMALL, TINY, lattice_and_subset, lattices
from latenv import corpus
from latenv.admissible import (CRITERION, DEFINITION, FIXPOINT, IRREDUCIBLE,
                               admissible_decomposition, afilter_generate, aideal_generate,
                               is_join_admissible, is_meet_admissible, join_admissible_masks,
                               meet_admissible_masks)
from latenv.errors import SizeExceeded
from latenv.finlat import bits, to_mask


def S(L, *labels):
    return to_mask(L.index(x) for x in labels)


def test_m3_pair_is_not_join_admissible(m3):
    rep = is_join_admissible(m3, S(m3, "a", "b"))
    assert not rep
    a, lhs, rhs = rep.witness
    assert m3.names[a] == "c" and m3.names[lhs] == "c" and m3.names[rhs] == "0"
    irr = is_join_admissible(m3, S(m3, "a", "b"), IRREDUCIBLE)
    assert m3.names[irr.irr_witness] == "c"


def test_diamond_pair_is_join_admissible():
    L1 = corpus.transport_l1()
    assert is_join_admissible(L1, S(L1, "a1", "b1"))


def test_empty_and_singletons_are_admissible(m3):
    assert is_join_admissible(m3, 0) and is_meet_admissible(m3, 0)
    for x in range(m3.n):
        assert is_join_admissible(m3, 1 << x) and is_meet_admissible(m3, 1 << x)


@given(lattice_and_subset(SMALL))
def test_two_routes_agree(case):
    L, s = case
    a = is_join_admissible(L, s, DEFINITION).admissible
    b = is_join_admissible(L, s, IRREDUCIBLE).admissible
    assert a == b
    assert (s in join_admissible_masks(L)) == a


@given(lattice_and_subset())
def test_meet_admissibility_by_its_equation(case):
    L, s = case
    meet = L.meet_all(s)
    direct = all(L.join(a, meet) == L.meet_all(L.join(a, m) for m in bits(s)) for a in range(L.n))
    assert is_meet_admissible(L, s).admissible == direct
    assert (s in meet_admissible_masks(L)) == direct


@given(lattices())
def test_every_subset_of_distributive_is_admissible(L):
    if L.distributive:
        assert len(join_admissible_masks(L)) == 1 << L.n


def test_unknown_method(m3):
    with pytest.raises(ValueError):
        is_join_admissible(m3, 1, "nope")


# -- a-ideals ---------------------------------------------------------------------------

def is_a_ideal(L, I):
    if not L.is_downset(I) or not I >> L.bottom & 1:
        return False
    members = list(bits(I))
    for sub in range(1 << len(members)):
        s = to_mask(members[i] for i in bits(sub))
        if is_join_admissible(L, s, DEFINITION) and not I >> L.join_all(s) & 1:
            return False
    return True


def brute_least_a_ideal(L, T):
    cands = [I for I in range(1 << L.n) if I & T == T and is_a_ideal(L, I)]
    least = [I for I in cands if all(I & ~J == 0 for J in cands)]
    assert len(least) == 1
    return least[0]


@pytest.mark.parametrize("L", TINY, ids=lambda L: L.name)
def test_generation_matches_brute_least_a_ideal(L):
    for T in range(1 << L.n):
        want = brute_least_a_ideal(L, T)
        assert to_mask(aideal_generate(L, T, CRITERION)) == want
        assert to_mask(aideal_generate(L, T, FIXPOINT)) == want


def test_m3_ideal_of_two_atoms_is_everything(m3):
    assert aideal_generate(m3, S(m3, "a", "b")) == frozenset({m3.index(x) for x in ("0", "a", "b")})
    assert aideal_generate(m3, 0) == frozenset({m3.bottom})
    L1 = corpus.transport_l1()
    assert aideal_generate(L1, S(L1, "a1", "b1")) == frozenset(range(4))


@given(lattice_and_subset(TINY))
def test_afilter_is_order_dual(case):
    L, T = case
    D = L.dual()
    assert afilter_generate(L, T) == aideal_generate(D, T)
    got = to_mask(afilter_generate(L, T))
    assert L.is_upset(got)


@given(lattice_and_subset(TINY))
def test_decomposition_inside_generated_ideal(case):
    L, T = case
    for b in aideal_generate(L, T):
        if T == 0:
            continue
        dec = admissible_decomposition(L, T, b)
        assert dec is not None
        assert L.join_all(dec) == b


def test_fixpoint_cap():
    with pytest.raises(SizeExceeded):
        aideal_generate(corpus.boolean(4), 1, FIXPOINT)
