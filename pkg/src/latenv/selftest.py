"""The acceptance suite as plain functions, shared by the CLI and the tests.

Each criterion returns a CriterionResult; reports carry no timing unless
asked for, so two runs with the same seed serialise to identical bytes.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Optional

from . import corpus
from .admissible import (CRITERION, DEFINITION, FIXPOINT, IRREDUCIBLE, aideal_generate,
                         is_join_admissible, join_admissible_masks)
from .duality import (check_tscp, double_dual_check, dual_polarity, free_dadl, is_tight,
                      validate_dadl)
from .envelope import denv_meet, extend_map, galois_closed, galois_pair
from .errors import LatticeError, PreconditionViolated
from .finlat import (FinLattice, bits, enumerate_lattices, find_isomorphism,
                     format_set, generated_sublattice)
from .morphisms import classify_map, describe_witness, enumerate_maps
from .pervin import bicompletion_points, blocks, lattice_space, pervin, verify_unifdual


@dataclass
class SelftestConfig:
    seed: int = 42
    max_n: Optional[int] = None     # caps every enumeration size below its default
    pervin_trials: int = 200
    timing: bool = False

    def bound(self, default: int) -> int:
        return default if self.max_n is None else min(default, self.max_n)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    checked: int = 0
    seconds: Optional[float] = None

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] criterion {self.number}: {self.title} -- {self.detail}"

    def as_dict(self, timing: bool = False) -> dict:
        out = {"criterion": self.number, "title": self.title,
               "outcome": "pass" if self.passed else "fail", "checked": self.checked,
               "detail": self.detail}
        if timing and self.seconds is not None:
            out["seconds"] = round(self.seconds, 3)
        return out


def _names(L: FinLattice, mask: int) -> str:
    return format_set(mask, L.names)


def hartung_bijection(L: FinLattice, pol) -> tuple[list[int], list[int]]:
    """Read off, from the prime-filter provenance, which irreducible of L each point is.

    X point of filter {V : p in V} is the p-th join-irreducible; Y point of
    filter {W : m not in W} is the m-th meet-irreducible.
    """
    dadl = galois_pair(L)
    em, ej = dadl.meet_env, dadl.join_env
    phi, psi = [], []
    for F in pol.x_filters:
        hits = [p for p in range(len(em.points))
                if F == sum(1 << i for i, V in enumerate(em.carrier.members) if V >> p & 1)]
        phi.append(hits[0] if len(hits) == 1 else -1)
    for F in pol.y_filters:
        hits = [m for m in range(len(ej.points))
                if F == sum(1 << i for i, W in enumerate(ej.carrier.members) if not W >> m & 1)]
        psi.append(hits[0] if len(hits) == 1 else -1)
    return phi, psi


# -- criteria ----------------------------------------------------------------------

def c1_envelope_of_m3(cfg: SelftestConfig) -> CriterionResult:
    env = denv_meet(corpus.m3())
    iso = find_isomorphism(env.lattice, corpus.boolean(3))
    iso3 = find_isomorphism(denv_meet(corpus.transport_l2()).lattice, corpus.transport_l3())
    ok = len(env.carrier) == 8 and iso is not None and iso3 is not None
    return CriterionResult(1, "meet-envelope of M3 is B3", ok,
                           f"carrier has {len(env.carrier)} members; "
                           f"iso to B3 {'found' if iso else 'missing'}; L3 = D(L2) {'yes' if iso3 else 'no'}", 2)


def c2_counterexample(cfg: SelftestConfig) -> CriterionResult:
    f, g = corpus.transport_f(), corpus.transport_g()
    c = classify_map(f)
    w = c.witnesses.get("sends_join_admissible_to_join_admissible")
    wtxt = describe_witness(f, w) if w is not None else "none"
    raised = ""
    try:
        extend_map(f.dom, g.compose(f), denv_meet(f.dom))
    except PreconditionViolated as exc:
        raised = str(exc)
    ok = (c.homomorphism and not c.sends_join_admissible_to_join_admissible
          and wtxt == "{a1,b1}" and bool(raised))
    return CriterionResult(2, "composite g.f breaks admissible joins", ok,
                           f"f homomorphism={c.homomorphism}, transport witness {wtxt}; "
                           f"extension of g.f: {raised or 'no error raised'}", 2)


def c3_admissibility_routes(cfg: SelftestConfig) -> CriterionResult:
    n = cfg.bound(7)
    checked, bad = 0, None
    for L in enumerate_lattices(n):
        for s in range(1, 1 << L.n):
            checked += 1
            a = is_join_admissible(L, s, DEFINITION).admissible
            b = is_join_admissible(L, s, IRREDUCIBLE).admissible
            if a != b:
                bad = f"{L.name} {_names(L, s)}"
                break
        if bad:
            break
    return CriterionResult(3, f"definition vs irreducible admissibility, n <= {n}", bad is None,
                           f"{checked} subsets agree" if bad is None else f"disagreement at {bad}", checked)


def c4_aideals(cfg: SelftestConfig) -> CriterionResult:
    n = cfg.bound(5)
    checked, bad = 0, None
    for L in enumerate_lattices(n):
        gen = {}
        for s in range(1 << L.n):
            fx, cr = aideal_generate(L, s, FIXPOINT), aideal_generate(L, s, CRITERION)
            checked += 1
            if fx != cr:
                bad = f"{L.name} generator {_names(L, s)}"
                break
            gen[s] = cr
        if bad:
            break
        for s in range(1 << L.n):
            for t in range(1 << L.n):
                meets = 0
                for a in bits(s):
                    for b in bits(t):
                        meets |= 1 << L.meet(a, b)
                checked += 1
                if gen[s] & gen[t] != gen[meets]:
                    bad = f"{L.name} intersection of {_names(L, s)} and {_names(L, t)}"
                    break
            if bad:
                break
        if bad:
            break
    return CriterionResult(4, f"a-ideal generation and intersection law, n <= {n}", bad is None,
                           f"{checked} checks agree" if bad is None else f"failure at {bad}", checked)


def c5_universal_property(cfg: SelftestConfig) -> CriterionResult:
    n = cfg.bound(5)
    lattices = enumerate_lattices(n)
    targets = [D for D in lattices if D.distributive]
    maps = inj = 0
    bad = None
    for L in lattices:
        env = denv_meet(L)
        for D in targets:
            for f in enumerate_maps(L, D, "meets_and_admissible_joins"):
                maps += 1
                try:
                    fhat = extend_map(L, f, env, verify_unique=True)
                except LatticeError as exc:
                    bad = f"{L.name} -> {D.name}: {exc}"
                    break
                if f.is_injective():
                    inj += 1
                    if not fhat.is_injective():
                        bad = f"{L.name} -> {D.name}: injective map lifts non-injectively"
                        break
            if bad:
                break
        if bad:
            break
    return CriterionResult(5, f"universal property of the meet-envelope, n <= {n}", bad is None,
                           f"{maps} maps extended uniquely, {inj} injective lifts injective"
                           if bad is None else bad, maps)


def c6_galois(cfg: SelftestConfig) -> CriterionResult:
    n = cfg.bound(6)
    checked, bad = 0, None
    for L in enumerate_lattices(n):
        closed, iso = galois_closed(galois_pair(L))
        checked += 1
        if iso is None or find_isomorphism(closed, L) is None:
            bad = L.name
            break
    return CriterionResult(6, f"Galois-closed elements recover L, n <= {n}", bad is None,
                           f"{checked} lattices reconstructed" if bad is None else f"fails for {bad}",
                           checked)


def c7_surjective_transport(cfg: SelftestConfig) -> CriterionResult:
    n = cfg.bound(5)
    lattices = enumerate_lattices(n)
    checked, bad = 0, None
    for L1 in lattices:
        for L2 in lattices:
            if L2.n > L1.n:
                continue
            for h in enumerate_maps(L1, L2, ["meets_and_admissible_joins", "surjective"]):
                checked += 1
                adm2 = join_admissible_masks(L2)
                for s in join_admissible_masks(L1):
                    if h.image(s) not in adm2:
                        bad = f"{L1.name} -> {L2.name} on {_names(L1, s)}"
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    return CriterionResult(7, f"surjections transport join-admissible sets, n <= {n}", bad is None,
                           f"{checked} surjective maps checked" if bad is None else f"fails: {bad}",
                           checked)


def c8_duality(cfg: SelftestConfig) -> CriterionResult:
    n = cfg.bound(6)
    checked, bad = 0, None
    for L in enumerate_lattices(n):
        checked += 1
        try:
            pol = dual_polarity(galois_pair(L))
            rep = check_tscp(pol)
            if not rep.ok:
                raise LatticeError(f"not a TSCP: {rep}")
            if not is_tight(pol).tight:
                raise LatticeError("not tight")
            double_dual_check(pol)
        except LatticeError as exc:
            bad = f"{L.name}: {exc}"
            break
        J, M = L.join_irreducibles, L.meet_irreducibles
        phi, psi = hartung_bijection(L, pol)
        if sorted(phi) != list(range(len(J))) or sorted(psi) != list(range(len(M))):
            bad = f"{L.name}: points are not in bijection with the irreducibles"
            break
        for x in range(pol.nx):
            for x2 in range(pol.nx):
                if bool(pol.x_up[x] >> x2 & 1) != L.leq(J[phi[x]], J[phi[x2]]):
                    bad = f"{L.name}: X order differs from J(L)"
            for y in range(pol.ny):
                if pol.related(x, y) != (not L.leq(J[phi[x]], M[psi[y]])):
                    bad = f"{L.name}: relation differs from the complement of <="
        for y in range(pol.ny):
            for y2 in range(pol.ny):
                if bool(pol.y_up[y] >> y2 & 1) != L.leq(M[psi[y]], M[psi[y2]]):
                    bad = f"{L.name}: Y order differs from M(L)"
        if bad:
            break
    return CriterionResult(8, f"duality suite, n <= {n}", bad is None,
                           f"{checked} polarities are tight TSCPs isomorphic to their double duals; "
                           "X = (J,<=), Y = (M,<=), x R y iff x is not below y"
                           if bad is None else bad, checked)


def c9_free_dadl(cfg: SelftestConfig) -> CriterionResult:
    fd = free_dadl(corpus.boolean(2))
    validate_dadl(fd.D, fd.E, fd.f, fd.g)
    pol = dual_polarity(fd)
    rep = is_tight(pol)
    wit = [U for U in rep.x_failures if U]
    txt = format_set(wit[0], pol.x_names) if wit else "none"
    ok = not rep.tight and bool(wit) and pol.closure(wit[0]) != wit[0]
    return CriterionResult(9, "free daDL over the 2x2 diamond is not tight", ok,
                           f"valid daDL with {fd.D.n}/{fd.E.n} elements; R-regular non-closed "
                           f"downset {txt}", 1)


def c10_pervin(cfg: SelftestConfig) -> CriterionResult:
    checked, bad = 0, None
    for size in range(0, cfg.bound(3) + 1):
        for fam in range(1 << (1 << size)):
            K = list(bits(fam))
            checked += 1
            try:
                blocks(pervin(size, K))
            except LatticeError as exc:
                bad = f"|X|={size} K={K}: {exc}"
                break
        if bad:
            break
    rng = random.Random(cfg.seed)
    for _ in range(cfg.pervin_trials if bad is None else 0):
        size = rng.randint(1, cfg.bound(5))
        K = [rng.getrandbits(size) for _ in range(rng.randint(0, 4))]
        checked += 1
        got = set(blocks(pervin(size, K)).members)
        if got != set(generated_sublattice(size, K, True).members):
            bad = f"random trial |X|={size} K={K}"
            break
    n = cfg.bound(6)
    if bad is None:
        for L in enumerate_lattices(n):
            checked += 1
            if not verify_unifdual(L).ok:
                bad = f"uniform duality fails for {L.name}"
                break
    if bad is None:
        for k in range(1, cfg.bound(6) + 1):
            bc = bicompletion_points(lattice_space(corpus.antichain_with_bounds(k)))
            checked += 1
            if sorted(bc.eta) != list(range(bc.poset.n)):
                bad = f"A{k} is not already bicomplete"
                break
    return CriterionResult(10, "Pervin blocks, uniform duality, finite truncations", bad is None,
                           f"{checked} checks pass" if bad is None else bad, checked)


CRITERIA: list[Callable[[SelftestConfig], CriterionResult]] = [
    c1_envelope_of_m3, c2_counterexample, c3_admissibility_routes, c4_aideals,
    c5_universal_property, c6_galois, c7_surjective_transport, c8_duality, c9_free_dadl,
    c10_pervin,
]


def run_selftest(cfg: SelftestConfig, only: Optional[list[int]] = None) -> list[CriterionResult]:
    out = []
    for i, crit in enumerate(CRITERIA, start=1):
        if only and i not in only:
            continue
        t0 = time.perf_counter()
        try:
            res = crit(cfg)
        except LatticeError as exc:
            res = CriterionResult(i, crit.__name__, False, f"error: {exc}")
        res.seconds = time.perf_counter() - t0
        out.append(res)
    return out


def report_dict(cfg: SelftestConfig, results: list[CriterionResult]) -> dict:
    return {"seed": cfg.seed, "max_n": cfg.max_n,
            "outcome": "pass" if all(r.passed for r in results) else "fail",
            "criteria": [r.as_dict(cfg.timing) for r in results]}


__all__ = ["SelftestConfig", "CriterionResult", "CRITERIA", "run_selftest", "report_dict",
           "hartung_bijection"]
