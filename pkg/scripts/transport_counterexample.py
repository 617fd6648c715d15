"""Walk through the three-lattice example where a homomorphism breaks admissible joins.

f: L1 -> L2 is a lattice homomorphism, g: L2 -> L3 is the unit of the
meet-envelope of L2, and g.f cannot be extended along the unit of L1.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from latenv import corpus
from latenv.envelope import denv_meet, extend_map
from latenv.errors import PreconditionViolated
from latenv.io import hasse_dot
from latenv.morphisms import classify_map, describe_witness


@dataclass
class Config:
    dot: bool = False       # also print the three Hasse diagrams


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dot", action="store_true")
    cfg = Config(**vars(ap.parse_args()))

    f, g = corpus.transport_f(), corpus.transport_g()
    for name, h in (("f", f), ("g", g), ("g.f", g.compose(f))):
        c = classify_map(h)
        print(f"{name}: {h.dom.name} -> {h.cod.name}  {h.as_names()}")
        for flag, ok in c.flags().items():
            w = c.witnesses.get(flag)
            print(f"  {flag:45} {ok}" + (f"  witness {describe_witness(h, w, flag)}" if w is not None else ""))
    try:
        extend_map(f.dom, g.compose(f), denv_meet(f.dom))
        print("extension of g.f exists (unexpected)")
    except PreconditionViolated as exc:
        print(f"extension of g.f refused: {exc}")
    if cfg.dot:
        for L in (f.dom, f.cod, g.cod):
            print(hasse_dot(L))


if __name__ == "__main__":
    main()
