"""Finite Pervin quasi-uniform spaces.

A finitely generated entourage filter is principal, so a space is stored as
its least basis entourage: the intersection of the U_A for A in K, where
U_A = {(p, q) : p in A implies q in A}. Row p of the basis is the mask of q.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .envelope import denv_join, denv_meet
from .errors import SizeExceeded, TheoremViolation
from .finlat import (FinLattice, Poset, SubsetFamilyLattice, bits, find_isomorphism,
                     format_set, generated_sublattice, prime_filter_poset, to_mask)

BLOCK_CAP = 20


@dataclass(frozen=True)
class PervinSpace:
    size: int
    K: tuple[int, ...]
    basis: tuple[int, ...]
    point_names: tuple[str, ...] = field(default=(), compare=False)

    @property
    def names(self) -> tuple[str, ...]:
        return self.point_names or tuple(f"p{i}" for i in range(self.size))

    def in_basis(self, p: int, q: int) -> bool:
        return bool(self.basis[p] >> q & 1)

    def pairs(self) -> list[tuple[int, int]]:
        return [(p, q) for p in range(self.size) for q in bits(self.basis[p])]


def entourage(size: int, A: int) -> tuple[int, ...]:
    """Rows of U_A."""
    full = (1 << size) - 1
    return tuple(A if A >> p & 1 else full for p in range(size))


def pervin(size: int, K: Iterable, point_names: Sequence[str] = ()) -> PervinSpace:
    fam = tuple(sorted({to_mask(A) for A in K}))
    full = (1 << size) - 1
    if any(A & ~full for A in fam):
        raise ValueError("generator outside the point set")
    rows = [full] * size
    for A in fam:
        for p, row in enumerate(entourage(size, A)):
            rows[p] &= row
    return PervinSpace(size, fam, tuple(rows), tuple(point_names))


def is_block(ps: PervinSpace, A: int) -> bool:
    """U_A is an entourage iff it contains the least basis entourage."""
    return all(row & ~u == 0 for row, u in zip(ps.basis, entourage(ps.size, A)))


def is_block_pairwise(ps: PervinSpace, A: int) -> bool:
    """Second oracle: the indicator of A is uniformly continuous into the
    Sierpinski space, checked pair by pair on the basis."""
    return all(not (A >> p & 1) or bool(A >> q & 1) for p, q in ps.pairs())


def blocks(ps: PervinSpace, cap: int = BLOCK_CAP) -> SubsetFamilyLattice:
    """All blocks by a scan of every subset, cross-checked against the
    bounded sublattice generated by K."""
    if ps.size > cap:
        raise SizeExceeded(f"block scan limited to {cap} points")
    found = [A for A in range(1 << ps.size) if is_block(ps, A)]
    expected = generated_sublattice(ps.size, ps.K, True, point_names=ps.names)
    if set(found) != set(expected.members):
        extra = set(found) ^ set(expected.members)
        raise TheoremViolation("blocks differ from the generated sublattice at "
                               + ", ".join(format_set(A, ps.names) for A in sorted(extra)))
    return SubsetFamilyLattice(ps.size, tuple(found), point_names=ps.names)


@dataclass
class Symmetrization:
    classes: list[int]
    basis: tuple[int, ...]


def symmetrize(ps: PervinSpace, cap: int = BLOCK_CAP) -> Symmetrization:
    inv = [to_mask(p for p in range(ps.size) if ps.basis[p] >> q & 1) for q in range(ps.size)]
    sym = tuple(ps.basis[p] & inv[p] for p in range(ps.size))
    fam = blocks(ps, cap).members
    classes: dict[int, int] = {}
    for p in range(ps.size):
        sig = to_mask(i for i, A in enumerate(fam) if A >> p & 1)
        classes[sig] = classes.get(sig, 0) | 1 << p
    parts = sorted(classes.values(), key=lambda m: (m & -m))
    for part in parts:
        for p in bits(part):
            if sym[p] != part:
                raise TheoremViolation("symmetric basis rows disagree with block classes")
    return Symmetrization(parts, sym)


@dataclass
class Bicompletion:
    blocks: SubsetFamilyLattice
    poset: Poset                     # prime filters of the block lattice, by inclusion
    filters: tuple[int, ...]         # masks over block indices
    eta: tuple[int, ...]             # point -> index of its block neighbourhood filter

    @property
    def lattice(self) -> FinLattice:
        return self.blocks.lattice

    def extension(self, A: int) -> int:
        """Points of the bicompletion containing block A."""
        i = self.blocks.index(A)
        return to_mask(k for k, F in enumerate(self.filters) if F >> i & 1)


def bicompletion_points(ps: PervinSpace, cap: int = BLOCK_CAP) -> Bicompletion:
    fam = blocks(ps, cap)
    pf = prime_filter_poset(fam.lattice)
    eta = []
    for p in range(ps.size):
        nbhd = to_mask(i for i, A in enumerate(fam.members) if A >> p & 1)
        try:
            eta.append(pf.filters.index(nbhd))
        except ValueError:
            raise TheoremViolation(f"neighbourhood filter of {ps.names[p]} is not prime") from None
    return Bicompletion(fam, pf.poset, pf.filters, tuple(eta))


def lattice_space(L: FinLattice, side: str = "J") -> PervinSpace:
    """(J(L), {hat(a)}) or (M(L), {check(a)})."""
    pts = L.join_irreducibles if side == "J" else L.meet_irreducibles
    pos = {x: i for i, x in enumerate(pts)}
    sets = (L.hat_mask if side == "J" else L.check_mask)
    K = [to_mask(pos[x] for x in bits(sets(a))) for a in range(L.n)]
    return pervin(len(pts), K, tuple(L.names[x] for x in pts))


@dataclass
class UnifDualReport:
    ok: bool
    j_points: int
    m_points: int
    j_iso: Optional[object]
    m_iso: Optional[object]


def verify_unifdual(L: FinLattice, cap: int = BLOCK_CAP, guard: int = 64) -> UnifDualReport:
    """Bicompletion points against the dual spaces of both envelopes.

    The M side's block lattice is the join-envelope turned upside down, so
    its prime filters are compared with the order dual of the envelope's.
    """
    bj = bicompletion_points(lattice_space(L, "J"), cap)
    bm = bicompletion_points(lattice_space(L, "M"), cap)
    pj = prime_filter_poset(denv_meet(L).lattice).poset
    pm = prime_filter_poset(denv_join(L).lattice).poset.dual()
    j_iso = find_isomorphism(bj.poset, pj, guard)
    m_iso = find_isomorphism(bm.poset, pm, guard)
    return UnifDualReport(j_iso is not None and m_iso is not None, bj.poset.n, bm.poset.n,
                          j_iso, m_iso)
