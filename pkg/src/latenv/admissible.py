"""Join/meet admissibility and a-ideal / a-filter generation.

A finite set M is join-admissible when ``a & join(M) == join(a & m for m in M)``
for every element a. Two independent routes are provided for every test: the
defining equation and the join-irreducible criterion.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .errors import SizeExceeded
from .finlat import FinLattice, bits, to_mask

DEFINITION = "definition"
IRREDUCIBLE = "irreducible"
FIXPOINT = "fixpoint"
CRITERION = "criterion"

FIXPOINT_CAP = 12


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    method: str
    witness: Optional[tuple[int, int, int]] = None  # (a, lhs, rhs)
    irr_witness: Optional[int] = None

    def __bool__(self):
        return self.admissible


def _join_admissible_by_definition(L: FinLattice, mask: int) -> Optional[tuple[int, int, int]]:
    top = L.join_all(mask)
    m = L.meet_table
    for a in range(L.n):
        lhs = m[a][top]
        rhs = L.join_all(m[a][x] for x in bits(mask))
        if lhs != rhs:
            return a, lhs, rhs
    return None


def _join_admissible_by_irreducibles(L: FinLattice, mask: int) -> Optional[int]:
    below_join = L.hat_mask(L.join_all(mask))
    covered = 0
    for x in bits(mask):
        covered |= L.hat_mask(x)
    missing = below_join & ~covered
    return next(bits(missing), None)


def is_join_admissible(L: FinLattice, M: Iterable[int] | int, method: str = DEFINITION) -> AdmissibilityReport:
    mask = to_mask(M)
    if method == DEFINITION:
        w = _join_admissible_by_definition(L, mask)
        return AdmissibilityReport(w is None, method, witness=w)
    if method == IRREDUCIBLE:
        x = _join_admissible_by_irreducibles(L, mask)
        return AdmissibilityReport(x is None, method, irr_witness=x)
    raise ValueError(f"unknown method {method!r}")


def is_meet_admissible(L: FinLattice, M: Iterable[int] | int, method: str = DEFINITION) -> AdmissibilityReport:
    """Order dual of :func:`is_join_admissible`; the irreducible route uses meet-irreducibles."""
    return is_join_admissible(_dual(L), M, method)


@lru_cache(maxsize=512)
def _dual(L: FinLattice) -> FinLattice:
    return L.dual()


@lru_cache(maxsize=512)
def join_admissible_masks(L: FinLattice) -> frozenset[int]:
    """Every join-admissible subset of L, as masks (the empty set included)."""
    if L.n > 20:
        raise SizeExceeded("exhaustive admissibility table is limited to 20 elements")
    return frozenset(s for s in range(1 << L.n) if _join_admissible_by_irreducibles(L, s) is None)


def meet_admissible_masks(L: FinLattice) -> frozenset[int]:
    return join_admissible_masks(_dual(L))


def _criterion_ideal(L: FinLattice, mask: int) -> int:
    cover = 0
    for a in bits(mask):
        cover |= L.hat_mask(a)
    return to_mask(b for b in range(L.n) if L.hat_mask(b) & ~cover == 0)


def _fixpoint_ideal(L: FinLattice, mask: int) -> int:
    if L.n > FIXPOINT_CAP:
        raise SizeExceeded(f"fixpoint a-ideal generation is capped at {FIXPOINT_CAP} elements")
    current = L.downclose(mask)
    while True:
        grown = current
        members = list(bits(current))
        for sub in range(1 << len(members)):
            s = to_mask(members[i] for i in bits(sub))
            if _join_admissible_by_definition(L, s) is None:
                grown |= L.down[L.join_all(s)]
        if grown == current:
            return current
        current = grown


def aideal_generate(L: FinLattice, T: Iterable[int] | int, method: str = CRITERION) -> frozenset[int]:
    """The least a-ideal containing T.

    ``criterion`` keeps every b whose join-irreducibles below are covered by
    those below some t in T. ``fixpoint`` downward-closes T and adds the join
    of every admissible subset (tested by the defining equation) until stable.
    """
    mask = to_mask(T)
    if method == CRITERION:
        return frozenset(bits(_criterion_ideal(L, mask)))
    if method == FIXPOINT:
        return frozenset(bits(_fixpoint_ideal(L, mask)))
    raise ValueError(f"unknown method {method!r}")


def afilter_generate(L: FinLattice, T: Iterable[int] | int, method: str = CRITERION) -> frozenset[int]:
    return aideal_generate(_dual(L), T, method)


def admissible_decomposition(L: FinLattice, T: Iterable[int] | int, b: int) -> Optional[frozenset[int]]:
    """For b in the a-ideal of T, the join-admissible set {b & t : t in T} joining to b."""
    mask = to_mask(T)
    M = to_mask(L.meet(b, t) for t in bits(mask))
    if L.join_all(M) == b and _join_admissible_by_definition(L, M) is None:
        return frozenset(bits(M))
    return None
