"""Sample random finite polarities, keep the TSCPs, and compare topological
tightness with its algebraic counterpart on the dual adjoint pair."""
from __future__ import annotations

import argparse
import random
from collections import Counter
from dataclasses import asdict, dataclass

from latenv.duality import (Polarity, admissible_structure_failures, check_tscp,
                            double_dual_check, dual_adjoint_pair, is_tight)


@dataclass
class SurveyConfig:
    seed: int = 42
    samples: int = 2000
    max_side: int = 4
    density: float = 0.5


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    for k, v in asdict(SurveyConfig()).items():
        ap.add_argument(f"--{k.replace('_', '-')}", type=type(v), default=v)
    cfg = SurveyConfig(**vars(ap.parse_args()))
    rng = random.Random(cfg.seed)
    tally = Counter()
    for _ in range(cfg.samples):
        nx, ny = rng.randint(1, cfg.max_side), rng.randint(1, cfg.max_side)
        R = [sum(1 << y for y in range(ny) if rng.random() < cfg.density) for _ in range(nx)]
        P = Polarity(nx, ny, tuple(R))
        if not check_tscp(P).ok:
            tally["not TSCP"] += 1
            continue
        double_dual_check(P)
        tight = is_tight(P).tight
        algebraic = not admissible_structure_failures(dual_adjoint_pair(P))
        tally["tight" if tight else "not tight"] += 1
        tally["agree" if tight == algebraic else "DISAGREE"] += 1
    for k in ("not TSCP", "tight", "not tight", "agree", "DISAGREE"):
        print(f"{k:10} {tally[k]}")


if __name__ == "__main__":
    main()
