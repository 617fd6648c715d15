"""Envelope sizes along parametrised families: chains, antichains with bounds,
Boolean lattices and the truncations K(depth, tail)."""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from latenv import corpus
from latenv.envelope import denv_join, denv_meet
from latenv.errors import SizeExceeded


@dataclass
class GrowthConfig:
    max_chain: int = 8
    max_antichain: int = 7
    max_boolean: int = 4
    max_depth: int = 4
    max_tail: int = 3
    cap: int = 2 ** 16


def family(cfg: GrowthConfig):
    for k in range(2, cfg.max_chain + 1):
        yield corpus.chain(k)
    for k in range(1, cfg.max_antichain + 1):
        yield corpus.antichain_with_bounds(k)
    for k in range(1, cfg.max_boolean + 1):
        yield corpus.boolean(k)
    for d in range(1, cfg.max_depth + 1):
        for t in range(0, min(d, cfg.max_tail) + 1):
            yield corpus.k_truncation(d, t)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    defaults = GrowthConfig()
    for name, val in vars(defaults).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=val)
    cfg = GrowthConfig(**vars(ap.parse_args()))
    print(f"{'lattice':10} {'n':>4} {'|J|':>4} {'|M|':>4} {'meet env':>9} {'join env':>9} {'sec':>7}")
    for L in family(cfg):
        t0 = time.perf_counter()
        try:
            m, j = len(denv_meet(L, cfg.cap).carrier), len(denv_join(L, cfg.cap).carrier)
        except SizeExceeded:
            m = j = "cap"
        dt = time.perf_counter() - t0
        print(f"{L.name:10} {L.n:>4} {len(L.join_irreducibles):>4} {len(L.meet_irreducibles):>4} "
              f"{m:>9} {j:>9} {dt:>7.3f}")


if __name__ == "__main__":
    main()
