"""Morphism classes between finite lattices, and exhaustive map enumeration."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Union

from .admissible import (_join_admissible_by_irreducibles, join_admissible_masks,
                         meet_admissible_masks)
from .errors import SizeExceeded
from .finlat import FinLattice, LatticeMap, all_subsets_by_size, bits, format_set, subset_key

SUBSET_CAP = 12
DEFAULT_SAMPLES = 10 ** 4
DEFAULT_MAP_CAP = 10 ** 7

FLAGS = (
    "monotone", "meet_preserving", "join_preserving", "homomorphism",
    "preserves_admissible_joins", "preserves_admissible_meets",
    "sends_join_admissible_to_join_admissible", "sends_meet_admissible_to_meet_admissible",
    "surjective", "injective", "wedge_avee", "vee_awedge", "admissible_homomorphism",
)


@dataclass
class MorphismClassification:
    monotone: bool
    meet_preserving: bool
    join_preserving: bool
    homomorphism: bool
    preserves_admissible_joins: bool
    preserves_admissible_meets: bool
    sends_join_admissible_to_join_admissible: bool
    sends_meet_admissible_to_meet_admissible: bool
    surjective: bool
    injective: bool
    witnesses: dict = field(default_factory=dict)
    sampled: bool = False

    @property
    def wedge_avee(self) -> bool:
        """A (meet, admissible-join)-morphism."""
        return (self.meet_preserving and self.preserves_admissible_joins
                and self.sends_join_admissible_to_join_admissible)

    @property
    def vee_awedge(self) -> bool:
        return (self.join_preserving and self.preserves_admissible_meets
                and self.sends_meet_admissible_to_meet_admissible)

    @property
    def admissible_homomorphism(self) -> bool:
        return (self.homomorphism and self.sends_join_admissible_to_join_admissible
                and self.sends_meet_admissible_to_meet_admissible)

    @property
    def meets_and_admissible_joins(self) -> bool:
        return self.meet_preserving and self.preserves_admissible_joins

    @property
    def joins_and_admissible_meets(self) -> bool:
        return self.join_preserving and self.preserves_admissible_meets

    def flags(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in FLAGS}


def _subsets_to_scan(n: int, cap: int, samples: int, seed: int) -> tuple[list[int], bool]:
    if n <= cap:
        return all_subsets_by_size(n), False
    rng = random.Random(seed)
    picked = {rng.getrandbits(n) for _ in range(samples)}
    return sorted(picked, key=subset_key), True


def _is_join_admissible(L: FinLattice, mask: int) -> bool:
    if L.n <= SUBSET_CAP:
        return mask in join_admissible_masks(L)
    return _join_admissible_by_irreducibles(L, mask) is None


def _is_meet_admissible(L: FinLattice, mask: int) -> bool:
    if L.n <= SUBSET_CAP:
        return mask in meet_admissible_masks(L)
    return _join_admissible_by_irreducibles(L.dual(), mask) is None


def classify_map(h: LatticeMap, cap: int = SUBSET_CAP, samples: int = DEFAULT_SAMPLES,
                 seed: int = 0) -> MorphismClassification:
    """Compute every preservation flag of ``h`` with a witness for each failure.

    Admissibility transport is checked on all subsets of the domain up to
    ``cap`` elements and on ``samples`` random subsets above (``sampled`` set).
    Witness subsets are frozensets of domain indices.
    """
    L1, L2, t = h.dom, h.cod, h.table
    w: dict = {}

    def first(name, value):
        if name not in w:
            w[name] = value

    for a in range(L1.n):
        for b in bits(L1.up[a]):
            if not L2.leq(t[a], t[b]):
                first("monotone", (a, b))
    if t[L1.top] != L2.top:
        first("meet_preserving", ("top",))
    if t[L1.bottom] != L2.bottom:
        first("join_preserving", ("bottom",))
    for a in range(L1.n):
        for b in range(a + 1, L1.n):
            if t[L1.meet(a, b)] != L2.meet(t[a], t[b]):
                first("meet_preserving", (a, b))
            if t[L1.join(a, b)] != L2.join(t[a], t[b]):
                first("join_preserving", (a, b))

    subsets, sampled = _subsets_to_scan(L1.n, cap, samples, seed)
    for s in subsets:
        img = h.image(s)
        if _is_join_admissible(L1, s):
            if t[L1.join_all(s)] != L2.join_all(img):
                first("preserves_admissible_joins", frozenset(bits(s)))
            if not _is_join_admissible(L2, img):
                first("sends_join_admissible_to_join_admissible", frozenset(bits(s)))
        if _is_meet_admissible(L1, s):
            if t[L1.meet_all(s)] != L2.meet_all(img):
                first("preserves_admissible_meets", frozenset(bits(s)))
            if not _is_meet_admissible(L2, img):
                first("sends_meet_admissible_to_meet_admissible", frozenset(bits(s)))

    if not h.is_surjective():
        first("surjective", frozenset(set(range(L2.n)) - set(t)))
    if not h.is_injective():
        seen: dict[int, int] = {}
        for a, v in enumerate(t):
            if v in seen:
                first("injective", (seen[v], a))
                break
            seen[v] = a

    ok = lambda name: name not in w  # noqa: E731
    return MorphismClassification(
        monotone=ok("monotone"),
        meet_preserving=ok("meet_preserving"),
        join_preserving=ok("join_preserving"),
        homomorphism=ok("meet_preserving") and ok("join_preserving"),
        preserves_admissible_joins=ok("preserves_admissible_joins"),
        preserves_admissible_meets=ok("preserves_admissible_meets"),
        sends_join_admissible_to_join_admissible=ok("sends_join_admissible_to_join_admissible"),
        sends_meet_admissible_to_meet_admissible=ok("sends_meet_admissible_to_meet_admissible"),
        surjective=ok("surjective"),
        injective=ok("injective"),
        witnesses=w,
        sampled=sampled,
    )


def describe_witness(h: LatticeMap, value, flag: str = "") -> str:
    """Render a witness with element names; the surjectivity witness lives in the codomain."""
    if isinstance(value, frozenset):
        names = h.cod.names if flag == "surjective" else h.dom.names
        return format_set(sum(1 << a for a in value), names)
    if isinstance(value, tuple) and all(isinstance(v, int) for v in value):
        return "(" + ", ".join(h.dom.names[v] for v in value) + ")"
    return str(value)


# -- enumeration ------------------------------------------------------------------

_IMPLIES_MEET = {"meet_preserving", "homomorphism", "meets_and_admissible_joins", "wedge_avee",
                 "admissible_homomorphism"}
_IMPLIES_JOIN = {"join_preserving", "homomorphism", "joins_and_admissible_meets", "vee_awedge",
                 "admissible_homomorphism"}
_IMPLIES_AJOIN = {"preserves_admissible_joins", "meets_and_admissible_joins", "wedge_avee"}
_IMPLIES_AMEET = {"preserves_admissible_meets", "joins_and_admissible_meets", "vee_awedge"}
_IMPLIES_MONOTONE = (_IMPLIES_MEET | _IMPLIES_JOIN | _IMPLIES_AJOIN | _IMPLIES_AMEET | {"monotone"})
_CHEAP = {"any", "monotone", "meet_preserving", "join_preserving", "homomorphism",
          "preserves_admissible_joins", "preserves_admissible_meets",
          "meets_and_admissible_joins", "joins_and_admissible_meets", "surjective", "injective"}
_KNOWN = set(FLAGS) | _CHEAP

ClassFilter = Union[str, Iterable[str], Callable[[LatticeMap], bool]]


def enumerate_maps(L1: FinLattice, L2: FinLattice, class_filter: ClassFilter = "homomorphism",
                   cap: int = DEFAULT_MAP_CAP) -> list[LatticeMap]:
    """All maps L1 -> L2 in the requested class.

    ``class_filter`` is a flag name, an iterable of flag names that must all
    hold, or a predicate on LatticeMap (applied to every map; monotonicity is
    not assumed then). Preservation flags prune a monotone backtracking search
    along a linear extension of L1; ``cap`` bounds the number of search nodes.
    """
    predicate = None
    if callable(class_filter):
        predicate, wanted = class_filter, set()
    else:
        wanted = {class_filter} if isinstance(class_filter, str) else set(class_filter)
        unknown = wanted - _KNOWN
        if unknown:
            raise ValueError(f"unknown class filter(s): {sorted(unknown)}")
    wanted.discard("any")

    monotone = bool(wanted & _IMPLIES_MONOTONE)
    need_meet = bool(wanted & _IMPLIES_MEET)
    need_join = bool(wanted & _IMPLIES_JOIN)
    need_ajoin = bool(wanted & _IMPLIES_AJOIN) and not need_join
    need_ameet = bool(wanted & _IMPLIES_AMEET) and not need_meet
    if not monotone and L2.n ** L1.n > cap:
        raise SizeExceeded(f"{L2.n}^{L1.n} candidate maps exceed the cap of {cap}")

    order = L1.linear_extension
    pos = {a: i for i, a in enumerate(order)}
    # constraint checks attached to the element assigned last among those involved
    checks: list[list[tuple[str, object]]] = [[] for _ in order]
    if need_meet or need_join:
        for a in range(L1.n):
            for b in range(a + 1, L1.n):
                if need_meet:
                    m = L1.meet(a, b)
                    checks[max(pos[a], pos[b], pos[m])].append(("meet", (a, b, m)))
                if need_join:
                    j = L1.join(a, b)
                    checks[max(pos[a], pos[b], pos[j])].append(("join", (a, b, j)))
    if need_ajoin:
        for s in join_admissible_masks(L1):
            j = L1.join_all(s)
            last = max([pos[j]] + [pos[x] for x in bits(s)])
            checks[last].append(("ajoin", (s, j)))
    if need_ameet:
        for s in meet_admissible_masks(L1):
            m = L1.meet_all(s)
            last = max([pos[m]] + [pos[x] for x in bits(s)])
            checks[last].append(("ameet", (s, m)))

    fixed: dict[int, int] = {}
    if need_meet:
        fixed[L1.top] = L2.top
    if need_join:
        if fixed.get(L1.bottom, L2.bottom) != L2.bottom:
            return []  # one-element domain, top and bottom targets differ
        fixed[L1.bottom] = L2.bottom

    table = [-1] * L1.n
    results: list[LatticeMap] = []
    nodes = 0
    post = wanted - {"monotone", "meet_preserving", "join_preserving", "homomorphism",
                     "preserves_admissible_joins", "preserves_admissible_meets",
                     "meets_and_admissible_joins", "joins_and_admissible_meets"}

    def consistent(i):
        for kind, data in checks[i]:
            if kind == "meet":
                a, b, m = data
                if table[m] != L2.meet(table[a], table[b]):
                    return False
            elif kind == "join":
                a, b, j = data
                if table[j] != L2.join(table[a], table[b]):
                    return False
            elif kind == "ajoin":
                s, j = data
                if table[j] != L2.join_all(table[x] for x in bits(s)):
                    return False
            else:
                s, m = data
                if table[m] != L2.meet_all(table[x] for x in bits(s)):
                    return False
        return True

    def accept(h: LatticeMap) -> bool:
        if predicate is not None:
            return predicate(h)
        if not post:
            return True
        if post <= {"surjective", "injective"}:
            return (("surjective" not in post or h.is_surjective())
                    and ("injective" not in post or h.is_injective()))
        c = classify_map(h)
        return all(getattr(c, name) for name in post)

    def extend(i):
        nonlocal nodes
        nodes += 1
        if nodes > cap:
            raise SizeExceeded(f"map enumeration exceeded {cap} search nodes")
        if i == L1.n:
            h = LatticeMap(L1, L2, tuple(table))
            if accept(h):
                results.append(h)
            return
        a = order[i]
        if a in fixed:
            candidates = [fixed[a]]
        elif monotone:
            floor = L2.join_all(table[b] for b in bits(L1.lower_covers[a]))
            candidates = list(bits(L2.up[floor]))
        else:
            candidates = range(L2.n)
        for v in candidates:
            if monotone and any(not L2.leq(table[b], v) for b in bits(L1.lower_covers[a])):
                continue
            table[a] = v
            if consistent(i):
                extend(i + 1)
        table[a] = -1

    extend(0)
    return results
