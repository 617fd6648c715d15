"""Built-in lattices: the small worked examples plus parametrised families."""
from __future__ import annotations

import re
from functools import lru_cache

from .finlat import FinLattice, LatticeMap, build_lattice

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def _named(names, covers, name):
    pos = {x: i for i, x in enumerate(names)}
    return build_lattice(len(names), [(pos[a], pos[b]) for a, b in covers], names, name)


def chain(n: int) -> FinLattice:
    """C_n: n elements 0 < c1 < ... < 1."""
    if n < 1:
        raise ValueError("a chain needs at least one element")
    if n == 1:
        return build_lattice(1, [], ["0"], "C1")
    names = ["0"] + [f"c{i}" for i in range(1, n - 1)] + ["1"]
    return _named(names, list(zip(names, names[1:])), f"C{n}")


def antichain_with_bounds(n: int) -> FinLattice:
    """A_n: n pairwise incomparable atoms between 0 and 1."""
    if n < 1:
        raise ValueError("need at least one atom")
    atoms = [f"a{i}" for i in range(1, n + 1)]
    names = ["0"] + atoms + ["1"]
    return _named(names, [("0", a) for a in atoms] + [(a, "1") for a in atoms], f"A{n}")


def boolean(n: int) -> FinLattice:
    """B_n: subsets of n atoms; elements are named by their atom letters."""
    if not 0 <= n <= len(_LETTERS):
        raise ValueError("unsupported Boolean algebra size")
    subsets = sorted(range(1 << n), key=lambda s: (bin(s).count("1"), s))

    def label(s):
        if s == 0:
            return "0"
        if s == (1 << n) - 1:
            return "1"
        return "".join(_LETTERS[i] for i in range(n) if s >> i & 1)

    names = [label(s) for s in subsets]
    covers = [(label(s), label(s | 1 << i)) for s in subsets for i in range(n) if not s >> i & 1]
    return _named(names, covers, f"B{n}")


def m3() -> FinLattice:
    return _named(["0", "a", "b", "c", "1"],
                  [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")], "M3")


def n5() -> FinLattice:
    return _named(["0", "a", "b", "c", "1"],
                  [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")], "N5")


def transport_l1() -> FinLattice:
    return _named(["0", "a1", "b1", "1"], [("0", "a1"), ("0", "b1"), ("a1", "1"), ("b1", "1")], "L1")


def transport_l2() -> FinLattice:
    names = ["0", "a2", "b2", "c2", "1"]
    return _named(names, [("0", x) for x in names[1:4]] + [(x, "1") for x in names[1:4]], "L2")


def transport_l3() -> FinLattice:
    names = ["0", "a3", "b3", "c3", "a3b3", "a3c3", "b3c3", "1"]
    covers = [("0", "a3"), ("0", "b3"), ("0", "c3"),
              ("a3", "a3b3"), ("b3", "a3b3"), ("a3", "a3c3"), ("c3", "a3c3"),
              ("b3", "b3c3"), ("c3", "b3c3"),
              ("a3b3", "1"), ("a3c3", "1"), ("b3c3", "1")]
    return _named(names, covers, "L3")


def transport_f() -> LatticeMap:
    """L1 -> L2, a1 -> a2, b1 -> b2: a homomorphism that breaks admissibility."""
    return LatticeMap.from_names(transport_l1(), transport_l2(), {"0": "0", "a1": "a2", "b1": "b2", "1": "1"})


def transport_g() -> LatticeMap:
    """L2 -> L3, the unit of the meet-envelope: x2 -> x3."""
    return LatticeMap.from_names(transport_l2(), transport_l3(),
                                 {"0": "0", "a2": "a3", "b2": "b3", "c2": "c3", "1": "1"})


def k_truncation(depth: int, tail: int) -> FinLattice:
    """Finite piece of the non-arithmetic example.

    Levels i < depth carry a_i > b_i, c_i with each column a descending
    chain; b and c bottom out at 0. Atoms z_i < a_i for i < tail.
    """
    if depth < 1 or not 0 <= tail <= depth:
        raise ValueError("need depth >= 1 and 0 <= tail <= depth")
    names = ["0"]
    covers = []
    for i in range(depth):
        names += [f"a{i}", f"b{i}", f"c{i}"]
        covers += [(f"b{i}", f"a{i}"), (f"c{i}", f"a{i}")]
        if i + 1 < depth:
            covers += [(f"a{i + 1}", f"a{i}"), (f"b{i + 1}", f"b{i}"), (f"c{i + 1}", f"c{i}")]
    covers += [("0", f"b{depth - 1}"), ("0", f"c{depth - 1}")]
    for i in range(tail):
        names.append(f"z{i}")
        covers += [("0", f"z{i}"), (f"z{i}", f"a{i}")]
    return _named(names, covers, f"K{depth}_{tail}")


_FIXED = {"M3": m3, "N5": n5, "L1": transport_l1, "L2": transport_l2, "L3": transport_l3}
_FAMILIES = [
    (re.compile(r"C(\d+)"), lambda m: chain(int(m[1]))),
    (re.compile(r"B(\d+)"), lambda m: boolean(int(m[1]))),
    (re.compile(r"A(\d+)"), lambda m: antichain_with_bounds(int(m[1]))),
    (re.compile(r"K(\d+)_(\d+)"), lambda m: k_truncation(int(m[1]), int(m[2]))),
]


@lru_cache(maxsize=None)
def builtin(name: str) -> FinLattice:
    """Look up M3, N5, L1..L3, C<n>, B<n>, A<n> or K<depth>_<tail>."""
    if name in _FIXED:
        return _FIXED[name]()
    for pat, make in _FAMILIES:
        m = pat.fullmatch(name)
        if m:
            return make(m)
    raise KeyError(name)


def is_builtin(name: str) -> bool:
    try:
        builtin(name)
    except (KeyError, ValueError):
        return False
    return True


def reference_corpus() -> list[FinLattice]:
    """The fixed corpus run by the self-test."""
    names = ["L1", "L2", "L3", "M3", "N5", "B2", "B3", "C2", "C3", "C4", "A2", "A3", "A4",
             "K2_1", "K2_2", "K3_2"]
    return [builtin(n) for n in names]


def small_corpus(max_n: int) -> list[FinLattice]:
    return [L for L in reference_corpus() if L.n <= max_n]


__all__ = ["chain", "antichain_with_bounds", "boolean", "m3", "n5", "transport_l1", "transport_l2",
           "transport_l3", "transport_f", "transport_g", "k_truncation", "builtin", "is_builtin",
           "reference_corpus", "small_corpus"]
