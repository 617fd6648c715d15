"""Finite posets and bounded lattices stored as order bitmasks.

Subsets of a finite base are Python ints used as bitsets throughout the
package: bit ``i`` set means element ``i`` is a member.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .errors import NotALattice, NotAPoset, NotDistributive, SizeExceeded, Unbounded

DEFAULT_FAMILY_CAP = 2 ** 20
DEFAULT_ISO_GUARD = 10
ENUMERATION_GUARD = 8


# -- bitset helpers -----------------------------------------------------------

def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(items: Iterable[int] | int) -> int:
    if isinstance(items, int):
        return items
    mask = 0
    for i in items:
        mask |= 1 << i
    return mask


def subset_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical sort key: cardinality first, then lexicographic on indices."""
    return mask.bit_count(), tuple(bits(mask))


def all_subsets_by_size(n: int) -> list[int]:
    return sorted(range(1 << n), key=subset_key)


def _default_names(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


def format_set(mask: int, names: Sequence[str]) -> str:
    return "{" + ",".join(names[i] for i in bits(mask)) + "}"


# -- posets -------------------------------------------------------------------

@dataclass(frozen=True)
class Poset:
    """A finite partial order. ``up[a]`` has bit ``b`` set iff ``a <= b``."""

    n: int
    up: tuple[int, ...]
    names: tuple[str, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "up", tuple(self.up))
        if not self.names:
            object.__setattr__(self, "names", _default_names(self.n))
        else:
            object.__setattr__(self, "names", tuple(self.names))
        if len(self.up) != self.n or len(self.names) != self.n:
            raise ValueError("order rows and names must both have length n")
        if len(set(self.names)) != self.n:
            raise ValueError("element names must be unique")
        full = (1 << self.n) - 1
        for a, row in enumerate(self.up):
            if row & ~full:
                raise ValueError(f"order row {a} references elements out of range")
            if not row >> a & 1:
                raise NotAPoset(f"order is not reflexive at {self.names[a]}")
            for b in bits(row):
                if b != a and self.up[b] >> a & 1:
                    raise NotAPoset(
                        f"cycle: {self.names[a]} and {self.names[b]} are mutually below each other")
                if self.up[b] & ~row:
                    raise NotAPoset(f"order is not transitive through {self.names[b]}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]], names=(), name=""):
        """Reflexive-transitive closure of the relation ``pairs`` (a below b)."""
        up = [1 << a for a in range(n)]
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"pair ({a}, {b}) out of range for n={n}")
            up[a] |= 1 << b
        for k in range(n):
            for a in range(n):
                if up[a] >> k & 1:
                    up[a] |= up[k]
        for a in range(n):
            for b in bits(up[a]):
                if b != a and up[b] >> a & 1:
                    label = names[a] if names else a
                    raise NotAPoset(f"cover relation has a cycle through {label}")
        return cls(n, tuple(up), tuple(names), name)

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    @cached_property
    def down(self) -> tuple[int, ...]:
        down = [0] * self.n
        for a, row in enumerate(self.up):
            for b in bits(row):
                down[b] |= 1 << a
        return tuple(down)

    @cached_property
    def upper_covers(self) -> tuple[int, ...]:
        covers = []
        for a in range(self.n):
            strict = self.up[a] & ~(1 << a)
            c = 0
            for b in bits(strict):
                if not any(x != b for x in bits(strict & self.down[b])):
                    c |= 1 << b
            covers.append(c)
        return tuple(covers)

    @cached_property
    def lower_covers(self) -> tuple[int, ...]:
        covers = [0] * self.n
        for a, row in enumerate(self.upper_covers):
            for b in bits(row):
                covers[b] |= 1 << a
        return tuple(covers)

    def covers(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in bits(self.upper_covers[a])]

    @cached_property
    def linear_extension(self) -> tuple[int, ...]:
        return tuple(sorted(range(self.n), key=lambda a: (self.down[a].bit_count(), a)))

    def index(self, label: str) -> int:
        try:
            return self.names.index(label)
        except ValueError:
            raise KeyError(f"no element named {label!r}") from None

    def matrix(self) -> list[list[bool]]:
        return [[self.leq(a, b) for b in range(self.n)] for a in range(self.n)]

    def dual(self) -> "Poset":
        return Poset(self.n, self.down, self.names, self.name + "^op" if self.name else "")

    def is_downset(self, mask: int) -> bool:
        return all(self.down[a] & ~mask == 0 for a in bits(mask))

    def is_upset(self, mask: int) -> bool:
        return all(self.up[a] & ~mask == 0 for a in bits(mask))

    def downclose(self, mask: int) -> int:
        out = 0
        for a in bits(mask):
            out |= self.down[a]
        return out

    def upclose(self, mask: int) -> int:
        out = 0
        for a in bits(mask):
            out |= self.up[a]
        return out

    def maximal(self, mask: int) -> int:
        return to_mask(a for a in bits(mask) if self.up[a] & mask == 1 << a)

    def minimal(self, mask: int) -> int:
        return to_mask(a for a in bits(mask) if self.down[a] & mask == 1 << a)

    def downsets(self, cap: int = DEFAULT_FAMILY_CAP) -> list[int]:
        """All downsets as masks, built along a linear extension."""
        result = [0]
        for x in self.linear_extension:
            below = self.down[x] & ~(1 << x)
            result += [d | 1 << x for d in result if d & below == below]
            if len(result) > cap:
                raise SizeExceeded(f"more than {cap} downsets")
        return result

    def subposet(self, elems: Sequence[int], names: Optional[Sequence[str]] = None) -> "Poset":
        elems = list(elems)
        up = []
        for a in elems:
            up.append(to_mask(i for i, b in enumerate(elems) if self.leq(a, b)))
        return Poset(len(elems), tuple(up),
                     tuple(names) if names else tuple(self.names[a] for a in elems))


# -- lattices -----------------------------------------------------------------

@dataclass(frozen=True)
class FinLattice(Poset):
    """A finite bounded lattice. Meet and join tables are derived and validated."""

    _meet: tuple = field(init=False, repr=False, compare=False, default=())
    _join: tuple = field(init=False, repr=False, compare=False, default=())

    def __post_init__(self):
        super().__post_init__()
        n = self.n
        if n == 0:
            raise Unbounded("the empty poset has no bounds")
        full = (1 << n) - 1
        if not any(row == full for row in self.up):
            lows = list(bits(self.minimal(full)))[:2]
            raise Unbounded(f"no least element: {self.names[lows[0]]} and {self.names[lows[1]]} "
                            "have no lower bound", tuple(lows))
        if not any(row == full for row in self.down):
            highs = list(bits(self.maximal(full)))[:2]
            raise Unbounded(f"no greatest element: {self.names[highs[0]]} and {self.names[highs[1]]} "
                            "have no upper bound", tuple(highs))
        down, up = self.down, self.up
        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                lower = down[a] & down[b]
                glb = next((c for c in bits(lower) if down[c] == lower), None)
                if glb is None:
                    raise NotALattice(
                        f"{self.names[a]} and {self.names[b]} have no greatest lower bound", (a, b))
                upper = up[a] & up[b]
                lub = next((c for c in bits(upper) if up[c] == upper), None)
                if lub is None:
                    raise NotALattice(
                        f"{self.names[a]} and {self.names[b]} have no least upper bound", (a, b))
                meet[a][b] = meet[b][a] = glb
                join[a][b] = join[b][a] = lub
        object.__setattr__(self, "_meet", tuple(map(tuple, meet)))
        object.__setattr__(self, "_join", tuple(map(tuple, join)))

    @classmethod
    def from_poset(cls, p: Poset, name: str = "") -> "FinLattice":
        return cls(p.n, p.up, p.names, name or p.name)

    @property
    def meet_table(self) -> tuple[tuple[int, ...], ...]:
        return self._meet

    @property
    def join_table(self) -> tuple[tuple[int, ...], ...]:
        return self._join

    @cached_property
    def bottom(self) -> int:
        return next(a for a in range(self.n) if self.up[a] == (1 << self.n) - 1)

    @cached_property
    def top(self) -> int:
        return next(a for a in range(self.n) if self.down[a] == (1 << self.n) - 1)

    def meet(self, a: int, b: int) -> int:
        return self._meet[a][b]

    def join(self, a: int, b: int) -> int:
        return self._join[a][b]

    def meet_all(self, elems: Iterable[int] | int) -> int:
        out = self.top
        for a in (bits(elems) if isinstance(elems, int) else elems):
            out = self._meet[out][a]
        return out

    def join_all(self, elems: Iterable[int] | int) -> int:
        out = self.bottom
        for a in (bits(elems) if isinstance(elems, int) else elems):
            out = self._join[out][a]
        return out

    def dual(self) -> "FinLattice":
        return FinLattice(self.n, self.down, self.names, self.name + "^op" if self.name else "")

    @cached_property
    def join_irreducibles(self) -> tuple[int, ...]:
        return tuple(a for a in range(self.n)
                     if a != self.bottom and self.lower_covers[a].bit_count() == 1)

    @cached_property
    def meet_irreducibles(self) -> tuple[int, ...]:
        return tuple(a for a in range(self.n)
                     if a != self.top and self.upper_covers[a].bit_count() == 1)

    @cached_property
    def J_mask(self) -> int:
        return to_mask(self.join_irreducibles)

    @cached_property
    def M_mask(self) -> int:
        return to_mask(self.meet_irreducibles)

    def hat_mask(self, a: int) -> int:
        """Join-irreducibles below ``a``, as a mask over element indices."""
        return self.down[a] & self.J_mask

    def check_mask(self, a: int) -> int:
        """Meet-irreducibles above ``a``, as a mask over element indices."""
        return self.up[a] & self.M_mask

    @cached_property
    def distributive(self) -> bool:
        return distributivity_witness(self) is None


def distributivity_witness(L: FinLattice) -> Optional[tuple[int, int, int]]:
    m, j = L.meet_table, L.join_table
    for a in range(L.n):
        for b in range(L.n):
            for c in range(b + 1, L.n):
                if m[a][j[b][c]] != j[m[a][b]][m[a][c]]:
                    return a, b, c
    return None


# -- the module's public operations ------------------------------------------

def build_lattice(n: int, covers: Iterable[tuple[int, int]], names: Optional[Sequence[str]] = None,
                  name: str = "") -> FinLattice:
    """Build a lattice from a cover (or any generating) relation.

    Raises NotAPoset on a cycle, Unbounded when there is no global min or
    max, and NotALattice naming the first pair lacking a lub or glb.
    """
    p = Poset.from_pairs(n, covers, tuple(names) if names else (), name)
    return FinLattice.from_poset(p, name)


def lattice_from_leq(matrix: Sequence[Sequence[bool]], names=None, name: str = "") -> FinLattice:
    n = len(matrix)
    up = tuple(to_mask(b for b in range(n) if matrix[a][b]) for a in range(n))
    return FinLattice(n, up, tuple(names) if names else (), name)


def meet_join(L: FinLattice, a: int, b: int) -> tuple[int, int]:
    return L.meet(a, b), L.join(a, b)


def irreducibles(L: FinLattice) -> tuple[frozenset[int], frozenset[int]]:
    return frozenset(L.join_irreducibles), frozenset(L.meet_irreducibles)


def hat_check(L: FinLattice, a: int) -> tuple[frozenset[int], frozenset[int]]:
    return frozenset(bits(L.hat_mask(a))), frozenset(bits(L.check_mask(a)))


def is_distributive(L: FinLattice) -> bool:
    return L.distributive


# -- subset-family lattices -----------------------------------------------------

INCLUSION = "inclusion"
REVERSE = "reverse-inclusion"


@dataclass(frozen=True)
class SubsetFamilyLattice:
    """A family of subsets of ``range(base_size)`` closed under union and intersection.

    Under ``inclusion`` the lattice operations are (intersection, union); under
    ``reverse-inclusion`` they are (union, intersection).
    """

    base_size: int
    members: tuple[int, ...]
    orientation: str = INCLUSION
    point_names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.orientation not in (INCLUSION, REVERSE):
            raise ValueError(f"unknown orientation {self.orientation!r}")
        members = tuple(sorted(set(self.members), key=subset_key))
        if not members:
            raise ValueError("a lattice needs at least one member")
        full = (1 << self.base_size) - 1
        present = set(members)
        for s in members:
            if s & ~full:
                raise ValueError("member outside the base set")
        for s, t in itertools.combinations(members, 2):
            if s | t not in present or s & t not in present:
                raise ValueError(f"family not closed under union/intersection at "
                                 f"{format_set(s, self.names)}, {format_set(t, self.names)}")
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "point_names", tuple(self.point_names) or _default_names(self.base_size))

    @property
    def names(self) -> tuple[str, ...]:
        return self.point_names or _default_names(self.base_size)

    def __len__(self) -> int:
        return len(self.members)

    @cached_property
    def _position(self) -> dict[int, int]:
        return {s: i for i, s in enumerate(self.members)}

    def index(self, mask: int) -> int:
        return self._position[mask]

    def __contains__(self, mask: int) -> bool:
        return mask in self._position

    def meet(self, s: int, t: int) -> int:
        return s & t if self.orientation == INCLUSION else s | t

    def join(self, s: int, t: int) -> int:
        return s | t if self.orientation == INCLUSION else s & t

    def label(self, mask: int) -> str:
        return format_set(mask, self.names)

    @cached_property
    def lattice(self) -> FinLattice:
        ms = self.members
        if self.orientation == INCLUSION:
            up = [to_mask(j for j, t in enumerate(ms) if s & ~t == 0) for s in ms]
        else:
            up = [to_mask(j for j, t in enumerate(ms) if t & ~s == 0) for s in ms]
        return FinLattice(len(ms), tuple(up), tuple(self.label(s) for s in ms))


def generated_sublattice(base_size: int, family: Iterable, include_bounds: bool = True,
                         cap: int = DEFAULT_FAMILY_CAP, orientation: str = INCLUSION,
                         point_names: Sequence[str] = ()) -> SubsetFamilyLattice:
    """Smallest union/intersection-closed family containing ``family``.

    Worklist closure to a fixpoint; raises SizeExceeded past ``cap`` members.
    """
    seen: set[int] = set()
    work: list[int] = []

    def push(s):
        if s not in seen:
            seen.add(s)
            work.append(s)
            if len(seen) > cap:
                raise SizeExceeded(f"generated family exceeds {cap} members")

    if include_bounds:
        push(0)
        push((1 << base_size) - 1)
    for s in family:
        push(to_mask(s))
    done: list[int] = []
    while work:
        s = work.pop()
        for t in done:
            push(s | t)
            push(s & t)
        done.append(s)
    return SubsetFamilyLattice(base_size, tuple(seen), orientation, tuple(point_names))


def downsets(poset: Poset, cap: int = DEFAULT_FAMILY_CAP) -> FinLattice:
    """Distributive lattice of all downsets of ``poset`` under inclusion."""
    fam = SubsetFamilyLattice(poset.n, tuple(poset.downsets(cap)), INCLUSION, poset.names)
    lat = fam.lattice
    return FinLattice(lat.n, lat.up, lat.names, f"O({poset.name})" if poset.name else "")


def downset_family(poset: Poset, cap: int = DEFAULT_FAMILY_CAP) -> SubsetFamilyLattice:
    return SubsetFamilyLattice(poset.n, tuple(poset.downsets(cap)), INCLUSION, poset.names)


@dataclass(frozen=True)
class FilterPoset:
    """Prime filters of a distributive lattice, ordered by inclusion.

    ``filters[i]`` is a mask over lattice elements; ``generators[i]`` is the
    join-irreducible ``j`` with ``filters[i] == up(j)``.
    """

    poset: Poset
    filters: tuple[int, ...]
    generators: tuple[int, ...]

    def index_of(self, filt: int) -> int:
        return self.filters.index(filt)


def prime_filter_poset(D: FinLattice) -> FilterPoset:
    """Prime filters of a finite distributive lattice: exactly the up(j), j join-irreducible.

    Ordered by inclusion, so the result is isomorphic to the order dual of the
    join-irreducible subposet (up(j) is contained in up(k) iff k <= j).
    """
    if not D.distributive:
        raise NotDistributive(f"{D.name or 'lattice'} is not distributive")
    gens = D.join_irreducibles
    filters = tuple(D.up[j] for j in gens)
    up = tuple(to_mask(k for k, g in enumerate(filters) if f & ~g == 0) for f in filters)
    names = tuple("↑" + D.names[j] for j in gens)
    return FilterPoset(Poset(len(gens), up, names), filters, gens)


# -- perfectness ----------------------------------------------------------------

@dataclass
class PerfectnessReport:
    ok: bool
    failures: list[str]
    exhaustive: bool
    pairs_checked: int


def verify_perfect_and_canonical(L: FinLattice, exhaustive_limit: int = 6, samples: int = 10 ** 4,
                                 seed: int = 0) -> PerfectnessReport:
    """Check join/meet generation by irreducibles and the denseness/compactness
    clauses of a canonical extension for the identity embedding of ``L``.
    """
    failures = []
    for a in range(L.n):
        if L.join_all(bits(L.hat_mask(a))) != a:
            failures.append(f"{L.names[a]} is not the join of the join-irreducibles below it")
        if L.meet_all(bits(L.check_mask(a))) != a:
            failures.append(f"{L.names[a]} is not the meet of the meet-irreducibles above it")

    exhaustive = L.n <= exhaustive_limit
    if exhaustive:
        subsets = list(range(1 << L.n))
    else:
        rng = random.Random(seed)
        subsets = sorted({1 << a for a in range(L.n)} | {rng.getrandbits(L.n) for _ in range(samples)})
    meets = {s: L.meet_all(s) for s in subsets}
    joins = {s: L.join_all(s) for s in subsets}
    for u in range(L.n):
        from_below = L.join_all(m for m in meets.values() if L.leq(m, u))
        from_above = L.meet_all(j for j in joins.values() if L.leq(u, j))
        if from_below != u or from_above != u:
            failures.append(f"denseness fails at {L.names[u]}")

    pairs = 0
    if exhaustive:
        pair_iter = itertools.product(subsets, subsets)
    else:
        rng = random.Random(seed + 1)
        pair_iter = ((rng.choice(subsets), rng.choice(subsets)) for _ in range(samples))
    for s, t in pair_iter:
        pairs += 1
        if L.leq(meets[s], joins[t]):
            # finite S and T are their own finite witnesses; re-evaluate in L
            if not L.leq(L.meet_all(bits(s)), L.join_all(bits(t))):
                failures.append(f"compactness fails for {format_set(s, L.names)}, "
                                f"{format_set(t, L.names)}")
    return PerfectnessReport(not failures, failures, exhaustive, pairs)


# -- enumeration and isomorphism ------------------------------------------------

def _down_from_up(n: int, up: Sequence[int]) -> list[int]:
    down = [0] * n
    for a in range(n):
        for b in bits(up[a]):
            down[b] |= 1 << a
    return down


def canonical_code(n: int, up: Sequence[int]) -> int:
    """Minimal adjacency encoding over all invariant-respecting relabelings."""
    if n == 0:
        return 0
    down = _down_from_up(n, up)
    inv = [(down[a].bit_count(), up[a].bit_count()) for a in range(n)]
    inv2 = [(inv[a], tuple(sorted(inv[b] for b in bits(up[a]))),
             tuple(sorted(inv[b] for b in bits(down[a])))) for a in range(n)]
    groups: dict = {}
    for a in range(n):
        groups.setdefault(inv2[a], []).append(a)
    ordered = [groups[k] for k in sorted(groups)]
    best = None
    for choice in itertools.product(*(itertools.permutations(g) for g in ordered)):
        perm = [a for grp in choice for a in grp]
        pos = [0] * n
        for i, a in enumerate(perm):
            pos[a] = i
        code = 0
        for a in perm:
            row = 0
            for b in bits(up[a]):
                row |= 1 << pos[b]
            code = (code << n) | row
        if best is None or code < best:
            best = code
    return best


def _lattice_good(k: int, up: Sequence[int]) -> bool:
    """Every pair with a common upper (lower) bound has a least (greatest) one."""
    down = _down_from_up(k, up)
    for a in range(k):
        for b in range(a + 1, k):
            ub = up[a] & up[b]
            if ub and not any(up[c] == ub for c in bits(ub)):
                return False
            lb = down[a] & down[b]
            if lb and not any(down[c] == lb for c in bits(lb)):
                return False
    return True


def _interior_posets(k_max: int) -> list[list[tuple[int, ...]]]:
    """Iso classes of posets whose bounded completion is a lattice, by size.

    Each poset is grown by adding a maximal element above a downset. The
    lattice condition is inherited by removing a maximal element, so pruning
    non-lattice-good posets at every level loses nothing.
    """
    levels = [[()]]
    for k in range(k_max):
        found: dict[int, tuple[int, ...]] = {}
        for up in levels[-1]:
            p = Poset(k, up)
            for d in p.downsets():
                new = [row | (1 << k) if d >> a & 1 else row for a, row in enumerate(up)]
                new.append(1 << k)
                if _lattice_good(k + 1, new):
                    found.setdefault(canonical_code(k + 1, new), tuple(new))
        levels.append([found[c] for c in sorted(found)])
    return levels


_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def _bounded(up: Sequence[int], name: str) -> FinLattice:
    k = len(up)
    n = k + 2
    top_bit = 1 << (n - 1)
    rows = [(1 << n) - 1]
    rows += [(row << 1) | top_bit for row in up]
    rows.append(top_bit)
    names = ("0",) + tuple(_LETTERS[i] for i in range(k)) + ("1",)
    return FinLattice(n, tuple(rows), names, name)


def enumerate_lattices(max_n: int, guard: int = ENUMERATION_GUARD) -> list[FinLattice]:
    """All bounded lattices with at most ``max_n`` elements, one per iso class."""
    if max_n > guard:
        raise SizeExceeded(f"enumerate_lattices is guarded at n <= {guard}")
    out: list[FinLattice] = []
    if max_n >= 1:
        out.append(FinLattice(1, (1,), ("0",), "Lat1_0"))
    if max_n >= 2:
        for k, level in enumerate(_interior_posets(max_n - 2)):
            for i, up in enumerate(level):
                out.append(_bounded(up, f"Lat{k + 2}_{i}"))
    return out


def _invariant(p: Poset, a: int) -> tuple:
    return (p.down[a].bit_count(), p.up[a].bit_count(),
            p.lower_covers[a].bit_count(), p.upper_covers[a].bit_count())


def find_isomorphism(P1: Poset, P2: Poset, guard: int = DEFAULT_ISO_GUARD):
    """An order isomorphism P1 -> P2 as a LatticeMap, or None."""
    if P1.n > guard or P2.n > guard:
        raise SizeExceeded(f"isomorphism search is guarded at n <= {guard}")
    if P1.n != P2.n:
        return None
    n = P1.n
    inv1 = [_invariant(P1, a) for a in range(n)]
    inv2 = [_invariant(P2, a) for a in range(n)]
    if sorted(inv1) != sorted(inv2):
        return None
    order = P1.linear_extension
    image = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        a = order[i]
        for c in range(n):
            if used[c] or inv2[c] != inv1[a]:
                continue
            ok = True
            for j in range(i):
                b = order[j]
                if P1.leq(b, a) != P2.leq(image[b], c) or P1.leq(a, b) != P2.leq(c, image[b]):
                    ok = False
                    break
            if ok:
                image[a], used[c] = c, True
                if extend(i + 1):
                    return True
                image[a], used[c] = -1, False
        return False

    if not extend(0):
        return None
    return LatticeMap(P1, P2, tuple(image))


def is_isomorphic(P1: Poset, P2: Poset, guard: int = DEFAULT_ISO_GUARD) -> bool:
    return find_isomorphism(P1, P2, guard) is not None


# -- maps -------------------------------------------------------------------------

@dataclass(frozen=True)
class LatticeMap:
    """A function between finite posets, given by an index table."""

    dom: Poset
    cod: Poset
    table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.dom.n:
            raise ValueError("table length must equal the domain size")
        if any(not 0 <= v < self.cod.n for v in self.table):
            raise ValueError("table value outside the codomain")

    def __call__(self, a: int) -> int:
        return self.table[a]

    @classmethod
    def identity(cls, P: Poset) -> "LatticeMap":
        return cls(P, P, tuple(range(P.n)))

    @classmethod
    def from_names(cls, dom: Poset, cod: Poset, mapping: dict[str, str]) -> "LatticeMap":
        missing = [x for x in dom.names if x not in mapping]
        if missing:
            raise ValueError(f"map is undefined on {missing}")
        return cls(dom, cod, tuple(cod.index(mapping[x]) for x in dom.names))

    def compose(self, first: "LatticeMap") -> "LatticeMap":
        """``self`` after ``first``."""
        if first.cod != self.dom:
            raise ValueError("codomain of the first map must be the domain of the second")
        return LatticeMap(first.dom, self.cod, tuple(self.table[v] for v in first.table))

    def image(self, mask: int) -> int:
        return to_mask(self.table[a] for a in bits(mask))

    def is_injective(self) -> bool:
        return len(set(self.table)) == self.dom.n

    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.cod.n

    def is_monotone(self) -> bool:
        return all(self.cod.leq(self.table[a], self.table[b])
                   for a in range(self.dom.n) for b in bits(self.dom.up[a]))

    def as_names(self) -> dict[str, str]:
        return {self.dom.names[a]: self.cod.names[v] for a, v in enumerate(self.table)}
