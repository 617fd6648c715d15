"""Finite polarities dual to doubly dense adjoint pairs of distributive lattices.

Everything is finite, so every subset is clopen and compactness is
automatic: "clopen downset" means "downset" in every check below, and the
reports say so.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Optional

from .envelope import DaDL
from .errors import (NotAPoset, NotAdjoint, NotDaDLMorphism, NotDistributive, NotDoublyDense, NotTSCP,
                     TheoremViolation)
from .finlat import (REVERSE, FinLattice, LatticeMap, Poset, SubsetFamilyLattice,
                     bits, downset_family, subset_key, format_set, generated_sublattice, prime_filter_poset,
                     to_mask)
from .admissible import join_admissible_masks, meet_admissible_masks

FINITE_NOTE = "finite polarity: every subset is clopen and both sides are compact"


@dataclass(frozen=True)
class Polarity:
    """Point sets X, Y and a relation R; ``R[x]`` is the mask of y related to x."""

    nx: int
    ny: int
    R: tuple[int, ...]
    x_names: tuple[str, ...] = field(default=(), compare=False)
    y_names: tuple[str, ...] = field(default=(), compare=False)
    x_filters: tuple[int, ...] = field(default=(), compare=False, repr=False)
    y_filters: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "R", tuple(self.R))
        if len(self.R) != self.nx or any(r >> self.ny for r in self.R):
            raise ValueError("relation rows must be masks over Y, one per point of X")
        if not self.x_names:
            object.__setattr__(self, "x_names", tuple(f"x{i}" for i in range(self.nx)))
        if not self.y_names:
            object.__setattr__(self, "y_names", tuple(f"y{i}" for i in range(self.ny)))

    @classmethod
    def from_pairs(cls, nx: int, ny: int, pairs, **kw) -> "Polarity":
        rows = [0] * nx
        for x, y in pairs:
            rows[x] |= 1 << y
        return cls(nx, ny, tuple(rows), **kw)

    @cached_property
    def Rinv(self) -> tuple[int, ...]:
        inv = [0] * self.ny
        for x, row in enumerate(self.R):
            for y in bits(row):
                inv[y] |= 1 << x
        return tuple(inv)

    def related(self, x: int, y: int) -> bool:
        return bool(self.R[x] >> y & 1)

    def diamond(self, S: int) -> int:
        out = 0
        for x in bits(S):
            out |= self.R[x]
        return out

    def box(self, T: int) -> int:
        return to_mask(x for x in range(self.nx) if self.R[x] & ~T == 0)

    def closure(self, S: int) -> int:
        return self.box(self.diamond(S))

    def interior(self, T: int) -> int:
        return self.diamond(self.box(T))

    def is_r_closed(self, S: int) -> bool:
        return self.closure(S) == S

    def is_r_open(self, T: int) -> bool:
        return self.interior(T) == T

    @cached_property
    def x_up(self) -> tuple[int, ...]:
        """x_up[x]: points x2 with x <= x2, i.e. R[x] contained in R[x2]."""
        return tuple(to_mask(k for k in range(self.nx) if self.R[x] & ~self.R[k] == 0)
                     for x in range(self.nx))

    @cached_property
    def y_up(self) -> tuple[int, ...]:
        """y_up[y]: points y2 with y <= y2, i.e. R^-1[y] contains R^-1[y2]."""
        inv = self.Rinv
        return tuple(to_mask(k for k in range(self.ny) if inv[k] & ~inv[y] == 0)
                     for y in range(self.ny))

    def x_poset(self) -> Poset:
        try:
            return Poset(self.nx, self.x_up, self.x_names)
        except NotAPoset as exc:
            raise NotTSCP(f"induced quasi-order on X is not antisymmetric: {exc}") from None

    def y_poset(self) -> Poset:
        try:
            return Poset(self.ny, self.y_up, self.y_names)
        except NotAPoset as exc:
            raise NotTSCP(f"induced quasi-order on Y is not antisymmetric: {exc}") from None

    def transpose(self) -> "Polarity":
        return Polarity(self.ny, self.nx, self.Rinv, self.y_names, self.x_names,
                        self.y_filters, self.x_filters)


# -- daDLs --------------------------------------------------------------------

def validate_dadl(D: FinLattice, E: FinLattice, f: LatticeMap, g: LatticeMap, **extra) -> DaDL:
    """Check distributivity, the adjunction f -| g and double density."""
    for lat, side in ((D, "D"), (E, "E")):
        if not lat.distributive:
            raise NotDistributive(f"{side} is not distributive")
    if f.dom != D or f.cod != E or g.dom != E or g.cod != D:
        raise ValueError("f must map D to E and g must map E to D")
    for d in range(D.n):
        for e in range(E.n):
            if E.leq(f(d), e) != D.leq(d, g(e)):
                raise NotAdjoint(f"f({D.names[d]}) <= {E.names[e]} disagrees with "
                                 f"{D.names[d]} <= g({E.names[e]})", (d, e))
    g_img = set(g.table)
    f_img = set(f.table)
    for d in range(D.n):
        if D.join_all(x for x in g_img if D.leq(x, d)) != d:
            raise NotDoublyDense(f"{D.names[d]} is not a join of elements of g[E]", ("D", d))
    for e in range(E.n):
        if E.meet_all(y for y in f_img if E.leq(e, y)) != e:
            raise NotDoublyDense(f"{E.names[e]} is not a meet of elements of f[D]", ("E", e))
    return DaDL(D, E, f, g, **extra)


def dual_polarity(dadl: DaDL) -> Polarity:
    """Points are prime filters of D and E; x R y iff f[x] is contained in y."""
    px, py = prime_filter_poset(dadl.D), prime_filter_poset(dadl.E)
    R = tuple(to_mask(k for k, fy in enumerate(py.filters) if dadl.f.image(fx) & ~fy == 0)
              for fx in px.filters)
    return Polarity(len(px.filters), len(py.filters), R,
                    tuple(dadl.D.names[j] for j in px.generators),
                    tuple(dadl.E.names[j] for j in py.generators),
                    px.filters, py.filters)


class ModalOps(NamedTuple):
    diamond: object
    box: object
    closure: object
    interior: object
    x_order: tuple[int, ...]
    y_order: tuple[int, ...]


def modal_ops(pol: Polarity, check_limit: int = 12) -> ModalOps:
    """Diamond/box and the induced closure/interior, with their laws checked.

    Laws are checked on all subsets when both sides have at most
    ``check_limit`` points.
    """
    if pol.nx <= check_limit and pol.ny <= check_limit:
        xs, ys = range(1 << pol.nx), range(1 << pol.ny)
        for S in xs:
            c = pol.closure(S)
            if S & ~c or pol.closure(c) != c:
                raise TheoremViolation(f"closure law fails at {format_set(S, pol.x_names)}")
            for T in ys:
                if (pol.diamond(S) & ~T == 0) != (S & ~pol.box(T) == 0):
                    raise TheoremViolation("diamond is not left adjoint to box")
        for T in ys:
            i = pol.interior(T)
            if i & ~T or pol.interior(i) != i:
                raise TheoremViolation(f"interior law fails at {format_set(T, pol.y_names)}")
        for S in xs:
            for S2 in xs:
                if S & ~S2 == 0 and pol.closure(S) & ~pol.closure(S2):
                    raise TheoremViolation("closure is not monotone")
    return ModalOps(pol.diamond, pol.box, pol.closure, pol.interior, pol.x_up, pol.y_up)


def r_closed_family(pol: Polarity) -> list[int]:
    """All R-closed subsets of X: intersections of the sets {x : y not in R[x]}."""
    full = (1 << pol.nx) - 1
    found = {full}
    work = [full]
    for y in range(pol.ny):
        s = to_mask(x for x in range(pol.nx) if not pol.related(x, y))
        if s not in found:
            found.add(s)
            work.append(s)
    while work:
        s = work.pop()
        for t in list(found):
            u = s & t
            if u not in found:
                found.add(u)
                work.append(u)
    return sorted(found)


@dataclass
class TSCPReport:
    ok: bool
    r_separated: bool
    r_operational: bool
    totally_r_disconnected: bool
    separation_witness: Optional[tuple] = None
    disconnection_witness: Optional[tuple[int, int]] = None
    notes: list[str] = field(default_factory=list)


def check_tscp(pol: Polarity) -> TSCPReport:
    notes = [FINITE_NOTE, "R-operational holds vacuously: diamond/box images are clopen"]
    sep_w = None
    seen: dict[int, int] = {}
    for x, row in enumerate(pol.R):
        if row in seen:
            sep_w = ("X", seen[row], x)
            break
        seen[row] = x
    if sep_w is None:
        seen = {}
        for y, col in enumerate(pol.Rinv):
            if col in seen:
                sep_w = ("Y", seen[col], y)
                break
            seen[col] = y
    family = r_closed_family(pol)
    disc_w = None
    for x in range(pol.nx):
        for y in range(pol.ny):
            if pol.related(x, y):
                continue
            if not any(U >> x & 1 and not pol.diamond(U) >> y & 1
                       and pol.box(pol.diamond(U)) == U for U in family):
                disc_w = (x, y)
                break
        if disc_w:
            break
    ok = sep_w is None and disc_w is None
    return TSCPReport(ok, sep_w is None, True, disc_w is None, sep_w, disc_w, notes)


def _require_tscp(pol: Polarity) -> None:
    rep = check_tscp(pol)
    if not rep.ok:
        raise NotTSCP(f"polarity is not a TSCP (separation witness {rep.separation_witness}, "
                      f"disconnection witness {rep.disconnection_witness})")


def _dual_families(pol: Polarity) -> tuple[SubsetFamilyLattice, SubsetFamilyLattice]:
    _require_tscp(pol)
    return downset_family(pol.x_poset()), downset_family(pol.y_poset())


def dual_adjoint_pair(pol: Polarity) -> DaDL:
    """(downsets of X, downsets of Y, diamond, box), validated as a daDL."""
    Dfam, Efam = _dual_families(pol)
    D, E = Dfam.lattice, Efam.lattice
    try:
        f = LatticeMap(D, E, tuple(Efam.index(pol.diamond(U)) for U in Dfam.members))
        g = LatticeMap(E, D, tuple(Dfam.index(pol.box(V)) for V in Efam.members))
    except KeyError as exc:
        raise TheoremViolation("diamond/box do not preserve downsets") from exc
    return validate_dadl(D, E, f, g)


@dataclass
class DoubleDualReport:
    ok: bool
    phi: tuple[int, ...]
    psi: tuple[int, ...]
    failures: list[str]


def double_dual_check(pol: Polarity) -> DoubleDualReport:
    """Exhibit the bijections from a TSCP onto the dual polarity of its dual adjoint pair."""
    Dfam, Efam = _dual_families(pol)
    pair = dual_adjoint_pair(pol)
    pol2 = dual_polarity(pair)
    fails = []

    def neighbourhood(fam, p):
        return to_mask(i for i, U in enumerate(fam.members) if U >> p & 1)

    try:
        phi = tuple(pol2.x_filters.index(neighbourhood(Dfam, x)) for x in range(pol.nx))
        psi = tuple(pol2.y_filters.index(neighbourhood(Efam, y)) for y in range(pol.ny))
    except ValueError:
        raise TheoremViolation("a point neighbourhood filter is not a prime filter") from None
    if len(set(phi)) != pol2.nx or len(set(psi)) != pol2.ny or pol.nx != pol2.nx or pol.ny != pol2.ny:
        fails.append("point maps are not bijections")
    for x in range(pol.nx):
        for y in range(pol.ny):
            if pol.related(x, y) != pol2.related(phi[x], psi[y]):
                fails.append(f"relation not preserved at ({pol.x_names[x]}, {pol.y_names[y]})")
    if fails:
        raise TheoremViolation("; ".join(fails))
    return DoubleDualReport(True, phi, psi, fails)


# -- tightness ----------------------------------------------------------------

def guard_points(pol: Polarity) -> int:
    """Points x with R[x] different from R of the points strictly below x."""
    out = 0
    up = pol.x_up
    for x in range(pol.nx):
        below = to_mask(k for k in range(pol.nx) if k != x and up[k] >> x & 1)
        if pol.R[x] != pol.diamond(below):
            out |= 1 << x
    return out


def is_r_regular(pol: Polarity, U: int, guard: Optional[int] = None) -> bool:
    guard = guard_points(pol) if guard is None else guard
    RU = pol.diamond(U)
    return all(U >> x & 1 for x in bits(guard) if pol.R[x] & ~RU == 0)


def _regular_not_closed(pol: Polarity) -> list[int]:
    guard = guard_points(pol)
    return [U for U in pol.x_poset().downsets()
            if is_r_regular(pol, U, guard) and not pol.is_r_closed(U)]


@dataclass
class TightnessReport:
    tight: bool
    x_failures: list[int]
    y_failures: list[int]
    notes: list[str] = field(default_factory=list)


def is_tight(pol: Polarity) -> TightnessReport:
    """R-regular downsets of X must be R-closed; R-coregular downsets of Y R-open.

    The Y side is the X side of the transposed polarity. A downset V of Y is
    R-coregular when its complement (a downset of Y under the transposed
    order) is R-regular there, and V is R-open exactly when that complement is
    closed for the transposed relation.
    """
    _require_tscp(pol)
    x_fail = _regular_not_closed(pol)
    full_y = (1 << pol.ny) - 1
    y_fail = [full_y & ~W for W in _regular_not_closed(pol.transpose())]
    return TightnessReport(not x_fail and not y_fail, x_fail, y_fail, [FINITE_NOTE])


def embedded_lattice(dadl: DaDL) -> FinLattice:
    """The image of g as a lattice (meets from D, joins g f of joins in D)."""
    return FinLattice.from_poset(dadl.D.subposet(sorted(set(dadl.g.table))), "im(g)")


def admissible_structure_failures(dadl: DaDL) -> list[tuple[str, frozenset[int]]]:
    """Algebraic twin of tightness.

    im(g) must keep admissible joins inside D and im(f) admissible meets inside
    E. Failures are (side, set of D or E indices), empty set first.
    """
    out = []
    D, E = dadl.D, dadl.E
    img_g = sorted(set(dadl.g.table))
    Lg = FinLattice.from_poset(D.subposet(img_g))
    for s in sorted(join_admissible_masks(Lg), key=subset_key):
        elems = [img_g[i] for i in bits(s)]
        if img_g[Lg.join_all(s)] != D.join_all(elems):
            out.append(("D", frozenset(elems)))
    img_f = sorted(set(dadl.f.table))
    Lf = FinLattice.from_poset(E.subposet(img_f))
    for s in sorted(meet_admissible_masks(Lf), key=subset_key):
        elems = [img_f[i] for i in bits(s)]
        if img_f[Lf.meet_all(s)] != E.meet_all(elems):
            out.append(("E", frozenset(elems)))
    return out


def free_dadl(D: FinLattice, cap: int = 2 ** 16) -> DaDL:
    """Downsets of D against upsets of D (reverse inclusion), f = upper bounds,
    g = lower bounds: the adjunction generated by sending each a to itself.
    """
    if not D.distributive:
        raise NotDistributive("free_dadl expects a distributive lattice")
    Dfam = downset_family(D, cap)
    ups = [(1 << D.n) - 1 & ~S for S in Dfam.members]
    Efam = SubsetFamilyLattice(D.n, tuple(ups), REVERSE, D.names)

    def ub(S):
        return to_mask(u for u in range(D.n) if S & ~D.down[u] == 0)

    def lb(T):
        return to_mask(v for v in range(D.n) if T & ~D.up[v] == 0)

    Dl, El = Dfam.lattice, Efam.lattice
    f = LatticeMap(Dl, El, tuple(Efam.index(ub(S)) for S in Dfam.members))
    g = LatticeMap(El, Dl, tuple(Dfam.index(lb(T)) for T in Efam.members))
    return validate_dadl(Dl, El, f, g)


# -- morphisms ------------------------------------------------------------------

@dataclass
class TSCPMorphismReport:
    s_X: tuple[int, ...]
    s_Y: tuple[int, ...]
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def back_and_forth(P1: Polarity, P2: Polarity, sX, sY) -> list[str]:
    """Forth, diamond-back and box-back conditions for (sX, sY): P1 -> P2."""
    out = []
    for x in range(P1.nx):
        for y in range(P1.ny):
            if P1.related(x, y) and not P2.related(sX[x], sY[y]):
                out.append(f"forth fails at ({P1.x_names[x]}, {P1.y_names[y]})")
    for x2 in range(P2.nx):
        for y in range(P1.ny):
            if P2.related(x2, sY[y]) and not any(
                    P1.related(z, y) and P2.x_up[sX[z]] >> x2 & 1 for z in range(P1.nx)):
                out.append(f"diamond-back fails at ({P2.x_names[x2]}, {P1.y_names[y]})")
    for x in range(P1.nx):
        for y2 in range(P2.ny):
            if P2.related(sX[x], y2) and not any(
                    P1.related(x, w) and P2.y_up[y2] >> sY[w] & 1 for w in range(P1.ny)):
                out.append(f"box-back fails at ({P1.x_names[x]}, {P2.y_names[y2]})")
    return out


def _preimage_map(h: LatticeMap, src_filters, tgt_filters) -> tuple[int, ...]:
    out = []
    for F in tgt_filters:
        pre = to_mask(d for d in range(h.dom.n) if F >> h(d) & 1)
        try:
            out.append(src_filters.index(pre))
        except ValueError:
            raise TheoremViolation("preimage of a prime filter is not prime") from None
    return tuple(out)


def dual_tscp_morphism(hpair: tuple[LatticeMap, LatticeMap], source: DaDL,
                       target: DaDL) -> TSCPMorphismReport:
    """Dualise a daDL morphism (h_meet, h_join): source -> target.

    The dual runs from the target's polarity to the source's by taking
    preimages of prime filters.
    """
    h_meet, h_join = hpair
    if h_meet.dom != source.D or h_meet.cod != target.D or h_join.dom != source.E \
            or h_join.cod != target.E:
        raise ValueError("hpair does not run between the given daDLs")
    if h_join.compose(source.f) != target.f.compose(h_meet):
        raise NotDaDLMorphism("square h_join f1 = f2 h_meet fails", square="f")
    if h_meet.compose(source.g) != target.g.compose(h_join):
        raise NotDaDLMorphism("square h_meet g1 = g2 h_join fails", square="g")
    P_src, P_tgt = dual_polarity(target), dual_polarity(source)
    sX = _preimage_map(h_meet, P_tgt.x_filters, P_src.x_filters)
    sY = _preimage_map(h_join, P_tgt.y_filters, P_src.y_filters)
    return TSCPMorphismReport(sX, sY, back_and_forth(P_src, P_tgt, sX, sY))


# -- Hartung and Urquhart ---------------------------------------------------------

@dataclass
class UrquhartSpace:
    points: tuple[tuple[int, int], ...]   # (join-irreducible, meet-irreducible) element indices
    order1: tuple[int, ...]               # up masks of the first projection (reversed order on x)
    order2: tuple[int, ...]               # up masks of the second projection
    candidates: int                       # size of the pair set before taking maxima


@dataclass
class ClassicalDuals:
    hartung: Polarity
    closed_J: SubsetFamilyLattice
    closed_M: SubsetFamilyLattice
    urquhart: UrquhartSpace


def classical_duals(L: FinLattice) -> ClassicalDuals:
    J, M = L.join_irreducibles, L.meet_irreducibles
    hart = Polarity.from_pairs(len(J), len(M),
                               [(i, k) for i, x in enumerate(J) for k, y in enumerate(M) if L.leq(x, y)],
                               x_names=tuple(L.names[x] for x in J),
                               y_names=tuple(L.names[y] for y in M))
    jpos = {x: i for i, x in enumerate(J)}
    mpos = {y: i for i, y in enumerate(M)}
    hats = [to_mask(jpos[x] for x in bits(L.hat_mask(a))) for a in range(L.n)]
    checks = [to_mask(mpos[y] for y in bits(L.check_mask(a))) for a in range(L.n)]
    closed_J = generated_sublattice(len(J), hats, True, point_names=hart.x_names)
    closed_M = generated_sublattice(len(M), checks, True, point_names=hart.y_names)

    P = [(x, y) for x in J for y in M if not L.leq(x, y)]

    def preceq(p, q):
        return L.leq(q[0], p[0]) and L.leq(p[1], q[1])

    Z = tuple(p for p in P if not any(q != p and preceq(p, q) for q in P))
    o1 = tuple(to_mask(k for k, q in enumerate(Z) if L.leq(q[0], p[0])) for p in Z)
    o2 = tuple(to_mask(k for k, q in enumerate(Z) if L.leq(p[1], q[1])) for p in Z)
    return ClassicalDuals(hart, closed_J, closed_M, UrquhartSpace(Z, o1, o2, len(P)))
