import pytest
from hypothesis import given

from conftest import DISTRIBUTIVE, SMALL, TINY, lattices
from latenv import corpus
from latenv.envelope import (JOIN, MEET, check_extension_precondition, denv_join, denv_meet,
                             denv_on_morphism, extend_map, galois_closed, galois_pair,
                             verify_envelope)
from latenv.errors import NotDistributiveCodomain, PreconditionViolated
from latenv.finlat import LatticeMap, find_isomorphism, format_set
from latenv.morphisms import classify_map, enumerate_maps


def count_downsets(P):
    return sum(1 for S in range(1 << P.n) if P.is_downset(S))


def test_meet_envelope_of_m3_is_b3(m3, b3):
    env = denv_meet(m3)
    assert len(env.carrier) == 8
    assert find_isomorphism(env.lattice, b3) is not None
    assert env.lattice.names[env.unit(m3.index("a"))] == "{a}"


def test_both_envelopes_of_n5(n5):
    assert len(denv_meet(n5).carrier) == 6 and len(denv_join(n5).carrier) == 6


@pytest.mark.parametrize("L", SMALL, ids=lambda L: L.name)
def test_envelope_invariants(L):
    assert verify_envelope(denv_meet(L)) == []
    assert verify_envelope(denv_join(L)) == []


@given(lattices())
def test_envelope_sizes_count_downsets_of_irreducibles(L):
    assert len(denv_meet(L).carrier) == count_downsets(L.subposet(list(L.join_irreducibles)))
    assert len(denv_join(L).carrier) == count_downsets(L.subposet(list(L.meet_irreducibles)).dual())


@given(lattices(DISTRIBUTIVE))
def test_distributive_lattice_is_its_own_envelope(D):
    env = denv_meet(D)
    assert env.unit.is_surjective()
    assert find_isomorphism(env.lattice, D, 64) is not None


def test_composite_fails_precondition():
    f, g = corpus.transport_f(), corpus.transport_g()
    L1 = f.dom
    with pytest.raises(PreconditionViolated) as info:
        extend_map(L1, g.compose(f), denv_meet(L1))
    assert "{a1,b1}" in str(info.value)
    assert info.value.witness == frozenset({L1.index("a1"), L1.index("b1")})


def test_unit_of_l2_is_g():
    g = corpus.transport_g()
    env = denv_meet(g.dom)
    iso = find_isomorphism(env.lattice, g.cod)
    assert iso is not None
    assert classify_map(g).meets_and_admissible_joins
    assert not classify_map(g).join_preserving


def test_non_distributive_codomain(m3):
    with pytest.raises(NotDistributiveCodomain):
        extend_map(m3, LatticeMap.identity(m3), denv_meet(m3))


def test_join_envelope_extension(n5):
    D = corpus.chain(2)
    env = denv_join(n5)
    maps = enumerate_maps(n5, D, "joins_and_admissible_meets")
    assert maps
    for f in maps:
        fhat = extend_map(n5, f, env)
        assert fhat.compose(env.unit) == f


@pytest.mark.parametrize("L", TINY, ids=lambda L: L.name)
def test_universal_property(L):
    env = denv_meet(L)
    for D in [K for K in TINY if K.distributive]:
        for f in enumerate_maps(L, D, "meets_and_admissible_joins"):
            fhat = extend_map(L, f, env)
            assert fhat.compose(env.unit) == f
            homs = [h for h in enumerate_maps(env.lattice, D, "homomorphism")
                    if h.compose(env.unit) == f]
            assert homs == [fhat]
            if f.is_injective():
                assert fhat.is_injective()


def test_precondition_checker_is_side_specific(m3):
    C2 = corpus.chain(2)
    # a, b -> 1 keeps every join but a /\ b = 0 is sent to 0 while 1 /\ 1 = 1
    two_atoms = LatticeMap(m3, C2, (0, 1, 1, 0, 1))
    with pytest.raises(PreconditionViolated):
        check_extension_precondition(m3, two_atoms, MEET)
    check_extension_precondition(m3, two_atoms, JOIN)
    one_atom = LatticeMap(m3, C2, (0, 1, 0, 0, 1))
    with pytest.raises(PreconditionViolated):
        check_extension_precondition(m3, one_atom, JOIN)
    check_extension_precondition(m3, one_atom, MEET)


# -- Galois pair --------------------------------------------------------------------------

def test_galois_pair_of_m3(m3):
    d = galois_pair(m3)
    a = d.D.names.index("{a}")
    ab = d.D.names.index("{a,b}")
    assert d.E.names[d.f(a)] == "{a}"
    assert d.E.names[d.f(ab)] == "{}"


@pytest.mark.parametrize("L", SMALL, ids=lambda L: L.name)
def test_galois_closed_recovers_lattice(L):
    d = galois_pair(L)
    closed, iso = galois_closed(d)
    assert iso is not None and find_isomorphism(closed, L, 64) is not None
    # adjunction, pointwise
    for x in range(d.D.n):
        for y in range(d.E.n):
            assert d.E.leq(d.f(x), y) == d.D.leq(x, d.g(y))
    # the image of g is meet-closed and equals the closed elements
    img = set(d.g.table)
    assert all(d.D.meet(a, b) in img for a in img for b in img)
    assert {x for x in range(d.D.n) if d.g(d.f(x)) == x} == img


def test_lift_of_chain_surjection():
    C3, C2 = corpus.chain(3), corpus.chain(2)
    h = LatticeMap.from_names(C3, C2, {"0": "0", "c1": "1", "1": "1"})
    hm, hj = denv_on_morphism(h)
    assert hm.is_surjective() and hj.is_surjective()
    assert classify_map(hm).homomorphism and classify_map(hj).homomorphism


def test_lift_rejects_transport_f():
    with pytest.raises(PreconditionViolated) as info:
        denv_on_morphism(corpus.transport_f())
    assert "{a1,b1}" in str(info.value) and "{a2,b2}" in str(info.value)


def test_lift_rejects_non_homomorphism(m3):
    with pytest.raises(PreconditionViolated):
        denv_on_morphism(LatticeMap(m3, m3, (m3.top,) * m3.n))


@pytest.mark.parametrize("L1", TINY, ids=lambda L: L.name)
def test_lifts_of_admissible_homomorphisms(L1):
    for L2 in TINY:
        for h in enumerate_maps(L1, L2, "admissible_homomorphism"):
            hm, hj = denv_on_morphism(h)
            assert hm.compose(denv_meet(L1).unit) == denv_meet(L2).unit.compose(h)
            assert hj.compose(denv_join(L1).unit) == denv_join(L2).unit.compose(h)


def test_labels_are_sets(m3):
    env = denv_meet(m3)
    assert format_set(env.carrier.members[-1], env.carrier.names) == "{a,b,c}"
