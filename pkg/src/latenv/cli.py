"""Command-line front end.

Exit codes: 0 pass, 1 mathematical failure (a witness is reported),
2 usage or parse error, 3 size cap exceeded.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from typing import Optional

from . import corpus
from .admissible import (CRITERION, aideal_generate, afilter_generate, is_join_admissible,
                         is_meet_admissible, IRREDUCIBLE)
from .duality import (check_tscp, classical_duals, double_dual_check, dual_polarity, free_dadl,
                      is_tight, validate_dadl)
from .envelope import denv_join, denv_meet, galois_closed, galois_pair
from .errors import LatticeError, ParseError, SizeExceeded
from .finlat import (DEFAULT_FAMILY_CAP, FinLattice, LatticeMap, bits, enumerate_lattices,
                     format_set, to_mask)
from .io import emit_document, hasse_dot, lattice_to_dict, parse_document, parse_pervin_document, polarity_dot
from .morphisms import classify_map, describe_witness
from .pervin import bicompletion_points, blocks, lattice_space, pervin, symmetrize
from .selftest import SelftestConfig, report_dict, run_selftest

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class Usage(Exception):
    pass


def load_lattice(arg: str) -> FinLattice:
    """A JSON lattice document path, or a built-in name such as M3, B3, C4, K2_1."""
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            return parse_document(fh.read())
    if corpus.is_builtin(arg):
        return corpus.builtin(arg)
    raise ParseError(f"{arg!r} is neither a readable file nor a built-in lattice")


def parse_labels(L: FinLattice, text: Optional[str]) -> int:
    if not text:
        return 0
    mask = 0
    for label in text.split(","):
        label = label.strip()
        if label not in L.names:
            raise Usage(f"unknown element {label!r} in {L.name or 'lattice'}")
        mask |= 1 << L.names.index(label)
    return mask


def digest(L: FinLattice) -> str:
    return hashlib.sha256(emit_document(L).encode()).hexdigest()[:16]


def _set(L, mask):
    return format_set(mask, L.names)


def _ls(L, elems):
    return [L.names[a] for a in elems]


# -- commands: each returns (outcome, result dict, text) ------------------------------

def cmd_validate(L, args):
    J, M = L.join_irreducibles, L.meet_irreducibles
    res = {"elements": L.n, "distributive": L.distributive, "join_irreducibles": _ls(L, J),
           "meet_irreducibles": _ls(L, M)}
    return "pass", res, f"{L.name or 'lattice'}: valid lattice with {L.n} elements" + \
        (", distributive" if L.distributive else "")


def cmd_show(L, args):
    if args.dot:
        return "pass", {"dot": hasse_dot(L)}, hasse_dot(L).rstrip()
    doc = lattice_to_dict(L)
    return "pass", doc, emit_document(L).rstrip()


def cmd_irreducibles(L, args):
    res = {"join_irreducibles": _ls(L, L.join_irreducibles),
           "meet_irreducibles": _ls(L, L.meet_irreducibles),
           "hat": {L.names[a]: _ls(L, bits(L.hat_mask(a))) for a in range(L.n)},
           "check": {L.names[a]: _ls(L, bits(L.check_mask(a))) for a in range(L.n)}}
    text = (f"J = {{{','.join(res['join_irreducibles'])}}}\n"
            f"M = {{{','.join(res['meet_irreducibles'])}}}")
    return "pass", res, text


def cmd_admissible(L, args):
    mask = parse_labels(L, args.set)
    test = is_meet_admissible if args.meet else is_join_admissible
    kind = "meet" if args.meet else "join"
    rep = test(L, mask)
    irr = test(L, mask, IRREDUCIBLE)
    res = {"set": _set(L, mask), "kind": kind, "admissible": rep.admissible}
    text = f"{_set(L, mask)} is {'' if rep.admissible else 'not '}{kind}-admissible"
    if not rep.admissible:
        a, lhs, rhs = rep.witness
        res["witness"] = {"element": L.names[a], "lhs": L.names[lhs], "rhs": L.names[rhs],
                          "irreducible": L.names[irr.irr_witness]}
        text += (f"; witness {L.names[a]}: distributing gives {L.names[rhs]} instead of "
                 f"{L.names[lhs]}; irreducible {L.names[irr.irr_witness]} is uncovered")
    return ("pass" if rep.admissible else "fail"), res, text


def cmd_aideal(L, args):
    mask = parse_labels(L, args.set)
    gen = afilter_generate if args.filter else aideal_generate
    got = gen(L, mask, args.method)
    kind = "a-filter" if args.filter else "a-ideal"
    res = {"generators": _set(L, mask), "kind": kind, "members": _ls(L, sorted(got))}
    return "pass", res, f"{kind} generated by {_set(L, mask)}: {_set(L, to_mask(got))}"


def cmd_envelope(L, args):
    env = (denv_join if args.side == "join" else denv_meet)(L, args.cap)
    members = [env.carrier.label(m) for m in env.carrier.members]
    unit = {L.names[a]: env.carrier.lattice.names[env.unit(a)] for a in range(L.n)}
    res = {"kind": env.kind, "points": _ls(L, env.points), "carrier": members, "unit": unit}
    if args.dot:
        return "pass", {**res, "dot": hasse_dot(env.lattice)}, hasse_dot(env.lattice).rstrip()
    text = [f"{env.kind} of {L.name or 'lattice'}: {len(members)} members over points "
            f"{{{','.join(res['points'])}}}"]
    text += [f"  {m}" for m in members]
    text.append("unit: " + ", ".join(f"{k} -> {v}" for k, v in unit.items()))
    return "pass", res, "\n".join(text)


def cmd_galois(L, args):
    dadl = galois_pair(L, args.cap)
    closed, iso = galois_closed(dadl)
    res = {"closed": list(closed.names), "isomorphic_to_source": iso is not None}
    if iso is not None:
        res["iso"] = {closed.names[i]: L.names[iso(i)] for i in range(closed.n)}
    text = f"{closed.n} Galois-closed elements: " + ", ".join(closed.names)
    text += "; isomorphic to the input" if iso else "; NOT isomorphic to the input"
    return ("pass" if iso else "fail"), res, text


def cmd_classify(L, args):
    if not args.cod or not args.map:
        raise Usage("classify needs --cod LATTICE and --map x=y,...")
    L2 = load_lattice(args.cod)
    pairs = {}
    for item in args.map.split(","):
        if "=" not in item:
            raise Usage(f"bad map entry {item!r}")
        a, b = (s.strip() for s in item.split("=", 1))
        pairs[a] = b
    try:
        h = LatticeMap.from_names(L, L2, pairs)
    except (KeyError, ValueError) as exc:
        raise Usage(f"map must name every element of the domain: {exc}") from None
    c = classify_map(h, samples=10 ** 4, seed=args.seed)
    flags = c.flags()
    wit = {k: describe_witness(h, v, k) for k, v in sorted(c.witnesses.items())}
    res = {"flags": flags, "witnesses": wit, "sampled": c.sampled}
    text = "\n".join(f"{k}: {v}" + (f" (witness {wit[k]})" if k in wit else "")
                     for k, v in flags.items())
    return "pass", res, text


def _dadl_for(L, args):
    if args.free:
        return free_dadl(L, args.cap)
    return galois_pair(L, args.cap)


def cmd_dadl(L, args):
    d = _dadl_for(L, args)
    validate_dadl(d.D, d.E, d.f, d.g)
    res = {"D": len(d.D.names), "E": len(d.E.names), "free": bool(args.free),
           "f": {d.D.names[i]: d.E.names[d.f(i)] for i in range(d.D.n)},
           "g": {d.E.names[i]: d.D.names[d.g(i)] for i in range(d.E.n)}}
    return "pass", res, f"valid doubly dense adjoint pair: |D| = {d.D.n}, |E| = {d.E.n}"


def _pol(pol):
    return {"X": list(pol.x_names), "Y": list(pol.y_names),
            "R": {pol.x_names[x]: [pol.y_names[y] for y in bits(pol.R[x])] for x in range(pol.nx)}}


def cmd_polarity(L, args):
    pol = dual_polarity(_dadl_for(L, args))
    if args.dot:
        dot = polarity_dot(pol, L.name or "polarity")
        return "pass", {"dot": dot}, dot.rstrip()
    res = _pol(pol)
    text = [f"X ({pol.nx} points), Y ({pol.ny} points)"]
    text += [f"  R[{x}] = {{{','.join(ys)}}}" for x, ys in res["R"].items()]
    return "pass", res, "\n".join(text)


def cmd_tscp(L, args):
    pol = dual_polarity(_dadl_for(L, args))
    rep = check_tscp(pol)
    res = {"tscp": rep.ok, "r_separated": rep.r_separated, "r_operational": rep.r_operational,
           "totally_r_disconnected": rep.totally_r_disconnected, "notes": rep.notes}
    if rep.ok:
        dd = double_dual_check(pol)
        res["double_dual"] = dd.ok
    return ("pass" if rep.ok else "fail"), res, \
        ("TSCP" if rep.ok else "not a TSCP") + f" ({pol.nx} x {pol.ny} points)"


def cmd_tight(L, args):
    pol = dual_polarity(_dadl_for(L, args))
    rep = is_tight(pol)
    xf = [format_set(U, pol.x_names) for U in rep.x_failures]
    yf = [format_set(V, pol.y_names) for V in rep.y_failures]
    res = {"tight": rep.tight, "x_failures": xf, "y_failures": yf, "notes": rep.notes}
    text = "tight" if rep.tight else "not tight"
    if xf:
        text += "; R-regular but not R-closed: " + "; ".join(xf)
    if yf:
        text += "; R-coregular but not R-open: " + "; ".join(yf)
    return ("pass" if rep.tight else "fail"), res, text


def cmd_classical(L, args):
    cd = classical_duals(L)
    u = cd.urquhart
    pairs = [f"({L.names[x]},{L.names[y]})" for x, y in u.points]
    res = {"hartung": _pol(cd.hartung),
           "closed_J": [cd.closed_J.label(m) for m in cd.closed_J.members],
           "closed_M": [cd.closed_M.label(m) for m in cd.closed_M.members],
           "urquhart_candidates": u.candidates, "urquhart_points": pairs}
    text = (f"Hartung: {cd.hartung.nx} x {cd.hartung.ny} points, {len(res['closed_J'])} / "
            f"{len(res['closed_M'])} closed sets\nUrquhart: {len(pairs)} maximal of "
            f"{u.candidates} pairs: " + ", ".join(pairs))
    return "pass", res, text


def _space(L, args):
    if args.pervin:
        with open(args.pervin, encoding="utf-8") as fh:
            n, fam, names = parse_pervin_document(fh.read())
        return pervin(n, fam, names)
    if L is None:
        raise Usage("give a lattice or --pervin FILE")
    return lattice_space(L, args.side)


def cmd_pervin_blocks(L, args):
    ps = _space(L, args)
    fam = blocks(ps)
    sym = symmetrize(ps)
    res = {"points": list(ps.names), "blocks": [fam.label(A) for A in fam.members],
           "classes": [format_set(c, ps.names) for c in sym.classes]}
    return "pass", res, f"{len(fam)} blocks: " + ", ".join(res["blocks"])


def cmd_bicompletion(L, args):
    ps = _space(L, args)
    bc = bicompletion_points(ps)
    res = {"points": list(bc.poset.names),
           "eta": {ps.names[p]: bc.poset.names[k] for p, k in enumerate(bc.eta)},
           "bijective": sorted(bc.eta) == list(range(bc.poset.n))}
    text = (f"{bc.poset.n} points; eta is {'bijective' if res['bijective'] else 'not bijective'}: "
            + ", ".join(f"{k} -> {v}" for k, v in res["eta"].items()))
    return "pass", res, text


def cmd_corpus(L, args):
    if args.emit:
        doc = emit_document(corpus.builtin(args.emit))
        return "pass", json.loads(doc), doc.rstrip()
    rows = [{"name": K.name, "elements": K.n, "distributive": K.distributive}
            for K in corpus.reference_corpus()]
    counts = {}
    if args.max_n:
        for K in enumerate_lattices(args.max_n):
            counts[str(K.n)] = counts.get(str(K.n), 0) + 1
    res = {"builtin": rows, "enumerated_by_size": counts}
    text = "\n".join(f"{r['name']:6} {r['elements']:3}  {'distributive' if r['distributive'] else ''}"
                     for r in rows)
    if counts:
        text += "\nlattices by size: " + ", ".join(f"{k}: {v}" for k, v in counts.items())
    return "pass", res, text


COMMANDS = {
    "validate": cmd_validate, "show": cmd_show, "irreducibles": cmd_irreducibles,
    "admissible": cmd_admissible, "aideal": cmd_aideal, "envelope": cmd_envelope,
    "galois": cmd_galois, "classify": cmd_classify, "dadl": cmd_dadl, "polarity": cmd_polarity,
    "tscp-check": cmd_tscp, "tight-check": cmd_tight, "classical": cmd_classical,
    "pervin-blocks": cmd_pervin_blocks, "bicompletion": cmd_bicompletion, "corpus": cmd_corpus,
}
_NO_LATTICE = {"corpus", "selftest"}
_OPTIONAL_LATTICE = {"pervin-blocks", "bicompletion"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON run report")
    common.add_argument("--dot", action="store_true", help="emit Graphviz DOT where supported")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--max-n", type=int, default=None)
    common.add_argument("--cap", type=int, default=DEFAULT_FAMILY_CAP)

    p = argparse.ArgumentParser(prog="latenv", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name in _OPTIONAL_LATTICE:
            sp.add_argument("lattice", nargs="?")
            sp.add_argument("--side", choices=["J", "M"], default="J")
            sp.add_argument("--pervin", metavar="FILE", help='raw space {"points": n, "family": [...]}')
        elif name not in _NO_LATTICE:
            sp.add_argument("lattice", help="lattice JSON file or built-in name")
        if name in ("admissible", "aideal"):
            sp.add_argument("--set", default="", help="comma-separated element labels")
        if name == "admissible":
            sp.add_argument("--meet", action="store_true")
        if name == "aideal":
            sp.add_argument("--filter", action="store_true")
            sp.add_argument("--method", choices=["criterion", "fixpoint"], default=CRITERION)
        if name == "envelope":
            sp.add_argument("--side", choices=["meet", "join"], default="meet")
        if name == "classify":
            sp.add_argument("--cod", help="codomain lattice")
            sp.add_argument("--map", help="x=y pairs for every domain element")
        if name in ("dadl", "polarity", "tscp-check", "tight-check"):
            sp.add_argument("--free", action="store_true", help="use the free daDL over the lattice")
        if name == "corpus":
            sp.add_argument("--emit", metavar="NAME", help="print a built-in as a JSON document")
    st = sub.add_parser("selftest", parents=[common])
    st.add_argument("--timing", action="store_true", help="include per-criterion timings")
    st.add_argument("--only", type=int, action="append", help="run only this criterion")
    return p


def _emit(args, report: dict, text: str, out) -> None:
    if args.json:
        out.write(json.dumps(report, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(text + "\n")


def _selftest(args, out) -> int:
    cfg = SelftestConfig(seed=args.seed, max_n=args.max_n, timing=args.timing)
    results = run_selftest(cfg, args.only)
    rep = report_dict(cfg, results)
    lines = [r.line() + (f" ({r.seconds:.2f}s)" if args.timing else "") for r in results]
    lines.append(f"selftest: {rep['outcome']}")
    _emit(args, {"command": "selftest", **rep}, "\n".join(lines), out)
    return EXIT_PASS if rep["outcome"] == "pass" else EXIT_FAIL


def main(argv: Optional[list[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    L = None
    try:
        if args.command not in _NO_LATTICE and getattr(args, "lattice", None):
            L = load_lattice(args.lattice)
    except LatticeError as exc:
        # unreadable documents and covers that do not describe a bounded lattice
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "selftest":
            return _selftest(args, out)
        outcome, result, text = COMMANDS[args.command](L, args)
    except (ParseError, Usage) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except LatticeError as exc:
        report = {"command": args.command, "outcome": "fail", "error": type(exc).__name__,
                  "message": str(exc)}
        _emit(args, report, f"{type(exc).__name__}: {exc}", out)
        return EXIT_FAIL
    report = {"command": args.command,
              "input": L.name if L is not None else None,
              "digest": digest(L) if L is not None else None,
              "outcome": outcome, "result": result}
    _emit(args, report, text, out)
    return EXIT_PASS if outcome == "pass" else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
