"""Distributive envelopes, their universal extension, and the Galois pair between them.

The meet-envelope of L is realised as the sublattice of subsets of J(L)
generated by the sets hat(a) (join-irreducibles below a), ordered by
inclusion. The join-envelope is the sublattice of subsets of M(L) generated
by the sets check(a) (meet-irreducibles above a), ordered by reverse
inclusion.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .admissible import join_admissible_masks, meet_admissible_masks
from .errors import NotDistributiveCodomain, PreconditionViolated, TheoremViolation
from .finlat import (DEFAULT_FAMILY_CAP, INCLUSION, REVERSE, FinLattice, LatticeMap,
                     SubsetFamilyLattice, bits, format_set, generated_sublattice, subset_key,
                     to_mask)
from .morphisms import classify_map, describe_witness, enumerate_maps

MEET = "meet-envelope"
JOIN = "join-envelope"

UNIQUENESS_CARRIER_CAP = 64
UNIQUENESS_CODOMAIN_CAP = 6
PRECONDITION_CAP = 12


@dataclass(frozen=True)
class Envelope:
    source: FinLattice
    carrier: SubsetFamilyLattice
    unit: LatticeMap
    kind: str
    points: tuple[int, ...]

    @property
    def lattice(self) -> FinLattice:
        return self.carrier.lattice

    def point_mask(self, element_mask: int) -> int:
        """Translate a mask over source elements to a mask over base positions."""
        return to_mask(i for i, p in enumerate(self.points) if element_mask >> p & 1)

    def generators(self, index: int) -> tuple[int, ...]:
        """Source elements (irreducible points) whose union of hats/checks is member ``index``."""
        return tuple(self.points[i] for i in bits(self.carrier.members[index]))


def _build(L: FinLattice, kind: str, cap: int) -> Envelope:
    if kind == MEET:
        points, of = L.join_irreducibles, L.hat_mask
        orientation = INCLUSION
    else:
        points, of = L.meet_irreducibles, L.check_mask
        orientation = REVERSE
    pos = {p: i for i, p in enumerate(points)}
    gens = [to_mask(pos[x] for x in bits(of(a))) for a in range(L.n)]
    carrier = generated_sublattice(len(points), gens, True, cap, orientation,
                                   tuple(L.names[p] for p in points))
    unit = LatticeMap(L, carrier.lattice, tuple(carrier.index(s) for s in gens))
    return Envelope(L, carrier, unit, kind, tuple(points))


@lru_cache(maxsize=1024)
def denv_meet(L: FinLattice, cap: int = DEFAULT_FAMILY_CAP) -> Envelope:
    """Distributive meet-envelope: unit a -> hat(a)."""
    return _build(L, MEET, cap)


@lru_cache(maxsize=1024)
def denv_join(L: FinLattice, cap: int = DEFAULT_FAMILY_CAP) -> Envelope:
    """Distributive join-envelope: unit a -> check(a), reverse inclusion."""
    return _build(L, JOIN, cap)


def verify_envelope(env: Envelope) -> list[str]:
    """Check the Envelope invariants; returns human-readable failures."""
    L, C, eta = env.source, env.lattice, env.unit
    fails = []
    if not eta.is_injective():
        fails.append("unit is not injective")
    for a in range(L.n):
        for b in range(L.n):
            if L.leq(a, b) != C.leq(eta(a), eta(b)):
                fails.append(f"unit does not preserve and reflect order at "
                             f"({L.names[a]}, {L.names[b]})")
    if not C.distributive:
        fails.append("carrier is not distributive")
    kept, gathered = (C.meet, C.join_all) if env.kind == MEET else (C.join, C.meet_all)
    kept_L = L.meet if env.kind == MEET else L.join
    adm = join_admissible_masks(L) if env.kind == MEET else meet_admissible_masks(L)
    gather_L = L.join_all if env.kind == MEET else L.meet_all
    for a in range(L.n):
        for b in range(L.n):
            if eta(kept_L(a, b)) != kept(eta(a), eta(b)):
                fails.append(f"unit fails to preserve a binary {'meet' if env.kind == MEET else 'join'}")
    bound = C.top if env.kind == MEET else C.bottom
    if eta(L.top if env.kind == MEET else L.bottom) != bound:
        fails.append("unit fails to preserve the empty meet/join")
    for s in adm:
        if eta(gather_L(s)) != gathered(eta(x) for x in bits(s)):
            fails.append(f"unit fails on admissible set {format_set(s, L.names)}")
    images = {eta(a) for a in range(L.n)}
    for c in range(C.n):
        if env.kind == MEET:
            if C.join_all(i for i in images if C.leq(i, c)) != c:
                fails.append(f"carrier member {C.names[c]} is not a join of unit images")
        elif C.meet_all(i for i in images if C.leq(c, i)) != c:
            fails.append(f"carrier member {C.names[c]} is not a meet of unit images")
    return fails


def check_extension_precondition(L: FinLattice, f: LatticeMap, kind: str = MEET) -> None:
    """Raise PreconditionViolated unless f preserves the structure the envelope keeps.

    Meet-envelopes need finite meets and admissible joins; join-envelopes the
    order dual.
    """
    D = f.cod
    if kind == MEET:
        keep, keep_D, gather, gather_D = L.meet, D.meet, L.join_all, D.join_all
        bound, bound_D, word = L.top, D.top, "meet"
        masks = join_admissible_masks(L) if L.n <= PRECONDITION_CAP else None
        adm_word = "join"
    else:
        keep, keep_D, gather, gather_D = L.join, D.join, L.meet_all, D.meet_all
        bound, bound_D, word = L.bottom, D.bottom, "join"
        masks = meet_admissible_masks(L) if L.n <= PRECONDITION_CAP else None
        adm_word = "meet"
    if f(bound) != bound_D:
        raise PreconditionViolated(f"map does not preserve the empty {word}", witness=())
    for a in range(L.n):
        for b in range(a + 1, L.n):
            if f(keep(a, b)) != keep_D(f(a), f(b)):
                raise PreconditionViolated(
                    f"map does not preserve the {word} of {L.names[a]} and {L.names[b]}",
                    witness=(a, b))
    if masks is None:
        cls = classify_map(f)
        ok = cls.preserves_admissible_joins if kind == MEET else cls.preserves_admissible_meets
        if not ok:
            key = "preserves_admissible_joins" if kind == MEET else "preserves_admissible_meets"
            s = cls.witnesses[key]
            raise PreconditionViolated(
                f"map does not preserve the admissible {adm_word} of {describe_witness(f, s)}",
                witness=s)
        return
    for s in sorted(masks, key=subset_key):
        if f(gather(s)) != gather_D(f(x) for x in bits(s)):
            raise PreconditionViolated(
                f"{format_set(s, L.names)} is {adm_word}-admissible but its {adm_word} is not preserved",
                witness=frozenset(bits(s)))


def extend_map(L: FinLattice, f: LatticeMap, env: Envelope, verify_unique: bool = True) -> LatticeMap:
    """The unique homomorphism from the envelope carrier into f's codomain extending f.

    For a meet-envelope the member generated by points T goes to the join of
    f over T; for a join-envelope to the meet.
    """
    D = f.cod
    if f.dom != L or env.source != L:
        raise ValueError("f and the envelope must both be built on L")
    if not isinstance(D, FinLattice) or not D.distributive:
        raise NotDistributiveCodomain("codomain of f is not distributive")
    check_extension_precondition(L, f, env.kind)
    C = env.lattice
    table = []
    for member in env.carrier.members:
        vals = [f(env.points[i]) for i in bits(member)]
        table.append(D.join_all(vals) if env.kind == MEET else D.meet_all(vals))
    fhat = LatticeMap(C, D, tuple(table))

    if fhat.compose(env.unit) != f:
        raise TheoremViolation("extension does not commute with the unit")
    if not classify_map(fhat).homomorphism:
        raise TheoremViolation("extension is not a lattice homomorphism")
    if verify_unique and C.n <= UNIQUENESS_CARRIER_CAP and D.n <= UNIQUENESS_CODOMAIN_CAP:
        others = [h for h in enumerate_maps(C, D, "homomorphism")
                  if h.compose(env.unit) == f and h != fhat]
        if others:
            raise TheoremViolation("extension is not unique")
    return fhat


# -- the Galois pair ------------------------------------------------------------

@dataclass(frozen=True)
class DaDL:
    """An adjoint pair f: D -> E, g: E -> D between distributive lattices."""

    D: FinLattice
    E: FinLattice
    f: LatticeMap
    g: LatticeMap
    source: Optional[FinLattice] = field(default=None, compare=False)
    meet_env: Optional[Envelope] = field(default=None, compare=False, repr=False)
    join_env: Optional[Envelope] = field(default=None, compare=False, repr=False)


@lru_cache(maxsize=1024)
def galois_pair(L: FinLattice, cap: int = DEFAULT_FAMILY_CAP) -> DaDL:
    """(meet-envelope, join-envelope, upper bounds u, lower bounds l) for L."""
    em, ej = denv_meet(L, cap), denv_join(L, cap)
    J, M = em.points, ej.points

    def upper(V: int) -> int:
        return to_mask(k for k, y in enumerate(M) if all(L.leq(J[i], y) for i in bits(V)))

    def lower(W: int) -> int:
        return to_mask(i for i, x in enumerate(J) if all(L.leq(x, M[k]) for k in bits(W)))

    try:
        f = tuple(ej.carrier.index(upper(V)) for V in em.carrier.members)
        g = tuple(em.carrier.index(lower(W)) for W in ej.carrier.members)
    except KeyError as exc:
        raise TheoremViolation("upper/lower bound maps leave the envelopes") from exc
    D, E = em.lattice, ej.lattice
    return DaDL(D, E, LatticeMap(D, E, f), LatticeMap(E, D, g), L, em, ej)


def galois_closed(dadl: DaDL) -> tuple[FinLattice, Optional[LatticeMap]]:
    """Lattice of d with g(f(d)) = d, and an isomorphism onto the source when known."""
    D, f, g = dadl.D, dadl.f, dadl.g
    closed = [d for d in range(D.n) if g(f(d)) == d]
    closed_lattice = FinLattice.from_poset(D.subposet(closed), "closed")
    iso = None
    if dadl.source is not None and dadl.meet_env is not None:
        L, eta = dadl.source, dadl.meet_env.unit
        back = {eta(a): a for a in range(L.n)}
        if set(back) == set(closed):
            table = tuple(back[d] for d in closed)
            cand = LatticeMap(closed_lattice, L, table)
            if cand.is_injective() and all(
                    closed_lattice.leq(i, k) == L.leq(table[i], table[k])
                    for i in range(len(closed)) for k in range(len(closed))):
                iso = cand
    return closed_lattice, iso


def denv_on_morphism(h: LatticeMap) -> tuple[LatticeMap, LatticeMap]:
    """Lift an admissible homomorphism to both envelopes and check all squares."""
    L1, L2 = h.dom, h.cod
    cls = classify_map(h)
    if not cls.admissible_homomorphism:
        if not cls.homomorphism:
            key = "meet_preserving" if not cls.meet_preserving else "join_preserving"
            raise PreconditionViolated(
                f"not a homomorphism: {key} fails at {describe_witness(h, cls.witnesses[key])}",
                witness=cls.witnesses[key])
        key = ("sends_join_admissible_to_join_admissible"
               if not cls.sends_join_admissible_to_join_admissible
               else "sends_meet_admissible_to_meet_admissible")
        s = cls.witnesses[key]
        kind = "join" if key.startswith("sends_join") else "meet"
        image = format_set(h.image(to_mask(s)), L2.names)
        raise PreconditionViolated(
            f"{describe_witness(h, s)} is {kind}-admissible but its image {image} is not",
            witness=s)
    m1, m2, j1, j2 = denv_meet(L1), denv_meet(L2), denv_join(L1), denv_join(L2)
    h_meet = extend_map(L1, m2.unit.compose(h), m1, verify_unique=False)
    h_join = extend_map(L1, j2.unit.compose(h), j1, verify_unique=False)
    if h_meet.compose(m1.unit) != m2.unit.compose(h) or h_join.compose(j1.unit) != j2.unit.compose(h):
        raise TheoremViolation("naturality square fails")
    p1, p2 = galois_pair(L1), galois_pair(L2)
    if p2.f.compose(h_meet) != h_join.compose(p1.f):
        raise TheoremViolation("upper-bound square fails")
    if p2.g.compose(h_join) != h_meet.compose(p1.g):
        raise TheoremViolation("lower-bound square fails")
    return h_meet, h_join
