import itertools

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from latenv import corpus
from latenv.finlat import FinLattice, enumerate_lattices

settings.register_profile("repo", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("repo")

SMALL = enumerate_lattices(6)
TINY = enumerate_lattices(5)
DISTRIBUTIVE = [L for L in SMALL if L.distributive]


@pytest.fixture
def m3():
    return corpus.m3()


@pytest.fixture
def n5():
    return corpus.n5()


@pytest.fixture
def b2():
    return corpus.boolean(2)


@pytest.fixture
def b3():
    return corpus.boolean(3)


def lattices(pool=SMALL):
    return st.sampled_from(pool)


@st.composite
def lattice_and_subset(draw, pool=SMALL):
    L = draw(st.sampled_from(pool))
    return L, draw(st.integers(0, (1 << L.n) - 1))


def relabel(L: FinLattice, perm) -> FinLattice:
    """Same lattice with element i moved to position perm[i]."""
    n = L.n
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    up = []
    for p in range(n):
        row = 0
        for b in range(n):
            if L.up[inv[p]] >> b & 1:
                row |= 1 << perm[b]
        up.append(row)
    return FinLattice(n, tuple(up), tuple(L.names[inv[p]] for p in range(n)))


def brute_lub(L, a, b):
    ubs = [c for c in range(L.n) if L.leq(a, c) and L.leq(b, c)]
    least = [c for c in ubs if all(L.leq(c, d) for d in ubs)]
    return least[0] if len(least) == 1 else None


def brute_glb(L, a, b):
    lbs = [c for c in range(L.n) if L.leq(c, a) and L.leq(c, b)]
    great = [c for c in lbs if all(L.leq(d, c) for d in lbs)]
    return great[0] if len(great) == 1 else None


def all_perms(n):
    return itertools.permutations(range(n))


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
