"""Tabulate envelope sizes, irreducibles and duality checks over all small lattices."""
from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, fields

from latenv.duality import check_tscp, dual_polarity, is_tight
from latenv.envelope import denv_join, denv_meet, galois_pair
from latenv.finlat import enumerate_lattices


@dataclass
class SweepConfig:
    max_n: int = 6
    out: str = "-"          # CSV path, or - for stdout


def parse(cls):
    ap = argparse.ArgumentParser(description=__doc__)
    for f in fields(cls):
        ap.add_argument(f"--{f.name.replace('_', '-')}", type=type(f.default), default=f.default)
    return cls(**vars(ap.parse_args()))


def rows(cfg: SweepConfig):
    for L in enumerate_lattices(cfg.max_n):
        pol = dual_polarity(galois_pair(L))
        yield {"name": L.name, "n": L.n, "distributive": L.distributive,
               "J": len(L.join_irreducibles), "M": len(L.meet_irreducibles),
               "meet_env": len(denv_meet(L).carrier), "join_env": len(denv_join(L).carrier),
               "R_pairs": sum(bin(r).count("1") for r in pol.R),
               "tscp": check_tscp(pol).ok, "tight": is_tight(pol).tight}


def main():
    cfg = parse(SweepConfig)
    fh = sys.stdout if cfg.out == "-" else open(cfg.out, "w", newline="")
    w = None
    for row in rows(cfg):
        if w is None:
            w = csv.DictWriter(fh, fieldnames=list(row))
            w.writeheader()
        w.writerow(row)
    if fh is not sys.stdout:
        fh.close()


if __name__ == "__main__":
    main()
