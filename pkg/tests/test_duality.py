import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import DISTRIBUTIVE, SMALL, TINY, lattices
from latenv import corpus
from latenv.duality import (Polarity, admissible_structure_failures, back_and_forth, check_tscp,
                            classical_duals, double_dual_check, dual_adjoint_pair, dual_polarity,
                            dual_tscp_morphism, embedded_lattice, free_dadl, guard_points,
                            is_r_regular, is_tight, modal_ops, r_closed_family, validate_dadl)
from latenv.envelope import denv_join, denv_meet, denv_on_morphism, galois_pair
from latenv.errors import (NotAdjoint, NotDaDLMorphism, NotDistributive, NotDoublyDense,
                           NotTSCP)
from latenv.finlat import LatticeMap, bits, find_isomorphism, format_set, to_mask
from latenv.morphisms import enumerate_maps


def polarity_iso(P, Q):
    """Brute-force search for bijections X -> X', Y -> Y' carrying R onto R'."""
    if (P.nx, P.ny) != (Q.nx, Q.ny) or sum(map(len, map(list, map(bits, P.R)))) != \
            sum(map(len, map(list, map(bits, Q.R)))):
        return None
    for sx in itertools.permutations(range(Q.nx)):
        for sy in itertools.permutations(range(Q.ny)):
            if all(P.related(x, y) == Q.related(sx[x], sy[y])
                   for x in range(P.nx) for y in range(P.ny)):
                return sx, sy
    return None


def complement_of_order(L):
    """J against M, related when the join-irreducible is not below the meet-irreducible."""
    J, M = L.join_irreducibles, L.meet_irreducibles
    return Polarity.from_pairs(len(J), len(M),
                               [(i, k) for i, x in enumerate(J) for k, y in enumerate(M)
                                if not L.leq(x, y)])


def random_polarity(rng, nx, ny, density=0.5):
    return Polarity(nx, ny, tuple(to_mask(y for y in range(ny) if rng.random() < density)
                                  for _ in range(nx)))


def random_tscps(count, seed=7, max_side=4):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        P = random_polarity(rng, rng.randint(1, max_side), rng.randint(1, max_side),
                            rng.choice([0.3, 0.5, 0.7]))
        if check_tscp(P).ok:
            out.append(P)
    return out


TSCPS = random_tscps(60)


# -- validation ---------------------------------------------------------------------

def test_validate_rejects_non_adjoint(b3):
    top = LatticeMap(b3, b3, (b3.top,) * b3.n)
    with pytest.raises(NotAdjoint) as info:
        validate_dadl(b3, b3, top, LatticeMap.identity(b3))
    d, e = info.value.pair
    assert b3.leq(top(d), e) != b3.leq(d, e)


def test_validate_rejects_non_dense(b2):
    C2 = corpus.chain(2)
    f = LatticeMap(b2, C2, tuple(0 if x == b2.bottom else 1 for x in range(b2.n)))
    g = LatticeMap(C2, b2, (b2.bottom, b2.top))
    with pytest.raises(NotDoublyDense):
        validate_dadl(b2, C2, f, g)


def test_validate_rejects_non_distributive(m3):
    ident = LatticeMap.identity(m3)
    with pytest.raises(NotDistributive):
        validate_dadl(m3, m3, ident, ident)


@given(lattices(DISTRIBUTIVE))
def test_identity_pair_is_valid_and_tight(D):
    ident = LatticeMap.identity(D)
    d = validate_dadl(D, D, ident, ident)
    pol = dual_polarity(d)
    assert is_tight(pol).tight
    assert admissible_structure_failures(d) == []


# -- dual polarity --------------------------------------------------------------------

def test_m3_polarity_is_complement_of_order(m3):
    pol = dual_polarity(galois_pair(m3))
    assert (pol.nx, pol.ny) == (3, 3)
    assert sum(bin(r).count("1") for r in pol.R) == 6
    assert polarity_iso(pol, complement_of_order(m3)) is not None


def test_two_element_chain_is_total():
    pol = dual_polarity(galois_pair(corpus.chain(2)))
    assert (pol.nx, pol.ny, pol.R) == (1, 1, (1,))


@pytest.mark.parametrize("L", [L for L in SMALL if L.n <= 6], ids=lambda L: L.name)
def test_dual_polarity_matches_irreducibles(L):
    pol = dual_polarity(galois_pair(L))
    assert polarity_iso(pol, complement_of_order(L)) is not None
    J = L.subposet(list(L.join_irreducibles))
    M = L.subposet(list(L.meet_irreducibles))
    assert find_isomorphism(pol.x_poset(), J) is not None
    assert find_isomorphism(pol.y_poset(), M) is not None


@given(lattices())
def test_transpose_is_dual_lattice(L):
    P = dual_polarity(galois_pair(L)).transpose()
    Q = dual_polarity(galois_pair(L.dual()))
    assert polarity_iso(P, Q) is not None


@pytest.mark.parametrize("P", TSCPS[:20])
def test_modal_laws(P):
    ops = modal_ops(P)
    for S in range(1 << P.nx):
        for T in range(1 << P.ny):
            assert (ops.diamond(S) & ~T == 0) == (S & ~ops.box(T) == 0)


def test_r_closed_family_by_brute_force():
    for P in TSCPS:
        want = sorted(S for S in range(1 << P.nx) if P.box(P.diamond(S)) == S)
        assert r_closed_family(P) == want


def test_closed_and_open_lattices_are_isomorphic():
    for P in TSCPS:
        closed = [S for S in range(1 << P.nx) if P.is_r_closed(S)]
        opened = [T for T in range(1 << P.ny) if P.is_r_open(T)]
        assert sorted(P.diamond(S) for S in closed) == sorted(opened)
        assert sorted(P.box(T) for T in opened) == closed


# -- TSCP -------------------------------------------------------------------------------

def test_duplicate_rows_fail_separation():
    P = Polarity(2, 1, (1, 1))
    rep = check_tscp(P)
    assert not rep.ok and not rep.r_separated and rep.separation_witness == ("X", 0, 1)
    with pytest.raises(NotTSCP):
        dual_adjoint_pair(P)


def test_single_unrelated_pair_is_tscp():
    P = Polarity(1, 1, (0,))
    assert check_tscp(P).ok
    d = dual_adjoint_pair(P)
    assert find_isomorphism(d.D, corpus.chain(2)) is not None
    assert find_isomorphism(d.E, corpus.chain(2)) is not None


def brute_disconnected(P):
    for x in range(P.nx):
        for y in range(P.ny):
            if P.related(x, y):
                continue
            if not any(U >> x & 1 and not P.diamond(U) >> y & 1
                       for U in range(1 << P.nx) if P.is_r_closed(U)):
                return False
    return True


@given(st.integers(0, 10 ** 6))
def test_tscp_check_against_brute_force(seed):
    rng = random.Random(seed)
    P = random_polarity(rng, rng.randint(1, 4), rng.randint(1, 4))
    rep = check_tscp(P)
    sep = len(set(P.R)) == P.nx and len(set(P.Rinv)) == P.ny
    assert rep.r_separated == sep
    assert rep.totally_r_disconnected == brute_disconnected(P)
    assert rep.ok == (sep and rep.totally_r_disconnected)


@pytest.mark.parametrize("L", SMALL, ids=lambda L: L.name)
def test_galois_polarities(L):
    d = galois_pair(L)
    pol = dual_polarity(d)
    assert check_tscp(pol).ok
    assert double_dual_check(pol).ok
    assert is_tight(pol).tight
    assert admissible_structure_failures(d) == []
    back = dual_adjoint_pair(pol)
    assert find_isomorphism(back.D, d.D, 64) is not None
    assert find_isomorphism(back.E, d.E, 64) is not None
    assert guard_points(pol) == (1 << pol.nx) - 1
    assert find_isomorphism(embedded_lattice(d), L, 64) is not None


@pytest.mark.parametrize("P", TSCPS)
def test_random_tscp_round_trip(P):
    rep = double_dual_check(P)
    assert rep.ok and sorted(rep.phi) == list(range(P.nx))


# -- tightness ------------------------------------------------------------------------

def test_free_dadl_of_b2_is_not_tight(b2):
    d = free_dadl(b2)
    assert (d.D.n, d.E.n) == (6, 6)
    pol = dual_polarity(d)
    rep = is_tight(pol)
    assert not rep.tight
    labels = {format_set(U, pol.x_names) for U in rep.x_failures}
    assert "{{0},{0,a},{0,b}}" in labels
    fails = admissible_structure_failures(d)
    pair = frozenset({d.D.names.index("{0,a}"), d.D.names.index("{0,b}")})
    assert ("D", pair) in fails
    assert ("D", frozenset()) in fails


def test_free_dadl_of_chain():
    d = free_dadl(corpus.chain(2))
    assert (d.D.n, d.E.n) == (3, 3)
    assert not is_tight(dual_polarity(d)).tight


def test_free_dadl_needs_distributive(m3):
    with pytest.raises(NotDistributive):
        free_dadl(m3)


@given(lattices([D for D in DISTRIBUTIVE if D.n <= 5]))
def test_free_dadl_guard_points(D):
    d = free_dadl(D)
    pol = dual_polarity(d)
    assert double_dual_check(pol).ok
    assert bin(guard_points(pol)).count("1") == len(D.join_irreducibles)


@pytest.mark.parametrize("P", TSCPS)
def test_tightness_matches_algebraic_twin(P):
    assert is_tight(P).tight == (admissible_structure_failures(dual_adjoint_pair(P)) == [])


@pytest.mark.parametrize("P", TSCPS)
def test_closed_downsets_are_regular(P):
    guard = guard_points(P)
    for U in P.x_poset().downsets():
        if P.is_r_closed(U):
            assert is_r_regular(P, U, guard)


# -- morphisms ------------------------------------------------------------------------

def test_identity_morphism_dualises(m3):
    d = galois_pair(m3)
    hm, hj = denv_on_morphism(LatticeMap.identity(m3))
    rep = dual_tscp_morphism((hm, hj), d, d)
    assert rep.ok and rep.s_X == tuple(range(3)) and rep.s_Y == tuple(range(3))


@pytest.mark.parametrize("L1", TINY, ids=lambda L: L.name)
def test_admissible_homomorphisms_dualise(L1):
    for L2 in TINY:
        for h in enumerate_maps(L1, L2, "admissible_homomorphism"):
            rep = dual_tscp_morphism(denv_on_morphism(h), galois_pair(L1), galois_pair(L2))
            assert rep.ok, rep.violations


def test_broken_square_is_reported():
    C3, C2 = corpus.chain(3), corpus.chain(2)
    h = LatticeMap.from_names(C3, C2, {"0": "0", "c1": "1", "1": "1"})
    hm, hj = denv_on_morphism(h)
    src, tgt = galois_pair(C3), galois_pair(C2)
    shifted = LatticeMap(hj.dom, hj.cod, tuple(tgt.E.top for _ in hj.table))
    with pytest.raises(NotDaDLMorphism):
        dual_tscp_morphism((hm, shifted), src, tgt)


def test_back_and_forth_catches_a_bad_pair():
    P = Polarity(2, 2, (0b01, 0b10))
    assert back_and_forth(P, P, (0, 1), (0, 1)) == []
    assert back_and_forth(P, P, (0, 1), (1, 0))


# -- classical duals ------------------------------------------------------------------

def test_classical_duals(m3, b3):
    cd = classical_duals(m3)
    assert sum(bin(r).count("1") for r in cd.hartung.R) == 3
    assert len(cd.closed_J.members) == 8
    assert len(cd.urquhart.points) == 6
    assert len(classical_duals(corpus.chain(2)).urquhart.points) == 1
    assert len(classical_duals(b3).urquhart.points) == 3


@given(lattices())
def test_hartung_closed_sets_match_envelopes(L):
    # unions of basic closed sets are closed too, so these are the envelopes
    cd = classical_duals(L)
    assert find_isomorphism(cd.closed_J.lattice, denv_meet(L).lattice, 64) is not None
    assert find_isomorphism(cd.closed_M.lattice.dual(), denv_join(L).lattice, 64) is not None


@given(lattices())
def test_urquhart_points_by_brute_force(L):
    J, M = L.join_irreducibles, L.meet_irreducibles
    P = [(x, y) for x in J for y in M if not L.leq(x, y)]
    below = lambda p, q: L.leq(q[0], p[0]) and L.leq(p[1], q[1])  # noqa: E731
    maximal = {p for p in P if all(q == p or not below(p, q) for q in P)}
    assert set(classical_duals(L).urquhart.points) == maximal
