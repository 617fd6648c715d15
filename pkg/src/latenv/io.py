"""Lattice documents (JSON) and DOT export."""
from __future__ import annotations

import json
from typing import Any

from .errors import LatticeError, ParseError
from .finlat import FinLattice, Poset, build_lattice


def _fail(msg, where):
    raise ParseError(msg, where)


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from None


def lattice_from_dict(doc: Any) -> FinLattice:
    if not isinstance(doc, dict):
        _fail("document must be a JSON object", "$")
    elements = doc.get("elements")
    covers = doc.get("covers", [])
    name = doc.get("name", "")
    if not isinstance(name, str):
        _fail("name must be a string", "$.name")
    if not isinstance(elements, list) or not elements:
        _fail("elements must be a non-empty list of labels", "$.elements")
    pos: dict[str, int] = {}
    for i, label in enumerate(elements):
        if not isinstance(label, str):
            _fail("element labels must be strings", f"$.elements[{i}]")
        if label in pos:
            _fail(f"duplicate label {label!r}", f"$.elements[{i}]")
        pos[label] = i
    if not isinstance(covers, list):
        _fail("covers must be a list of [lower, upper] pairs", "$.covers")
    pairs = []
    for i, c in enumerate(covers):
        if not (isinstance(c, list) and len(c) == 2 and all(isinstance(x, str) for x in c)):
            _fail("each cover must be a pair of labels", f"$.covers[{i}]")
        for x in c:
            if x not in pos:
                _fail(f"unknown label {x!r}", f"$.covers[{i}]")
        pairs.append((pos[c[0]], pos[c[1]]))
    try:
        return build_lattice(len(elements), pairs, elements, name)
    except LatticeError as exc:
        pair = getattr(exc, "pair", None)
        if pair:
            raise type(exc)(f"{exc} (elements {elements[pair[0]]}, {elements[pair[1]]})", pair) from None
        raise


def parse_document(text: str) -> FinLattice:
    """{"name": ..., "elements": [labels], "covers": [[lower, upper], ...]}."""
    return lattice_from_dict(_load(text))


def lattice_to_dict(L: Poset) -> dict:
    return {"name": L.name, "elements": list(L.names),
            "covers": [[L.names[a], L.names[b]] for a, b in L.covers()]}


def emit_document(L: Poset) -> str:
    return json.dumps(lattice_to_dict(L), indent=2, ensure_ascii=False) + "\n"


def parse_pervin_document(text: str) -> tuple[int, list[int], list[str]]:
    """{"points": n, "family": [[indices], ...], "names": optional labels}."""
    doc = _load(text)
    if not isinstance(doc, dict) or not isinstance(doc.get("points"), int) or doc["points"] < 0:
        _fail("points must be a non-negative integer", "$.points")
    n = doc["points"]
    fam = doc.get("family", [])
    if not isinstance(fam, list):
        _fail("family must be a list of index lists", "$.family")
    out = []
    for i, A in enumerate(fam):
        if not isinstance(A, list) or not all(isinstance(p, int) and 0 <= p < n for p in A):
            _fail("family members must be lists of point indices", f"$.family[{i}]")
        out.append(sum(1 << p for p in set(A)))
    names = doc.get("names") or [f"p{i}" for i in range(n)]
    if len(names) != n:
        _fail("names must label every point", "$.names")
    return n, out, list(names)


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_dot(L: Poset) -> str:
    lines = [f"digraph {_q(L.name or 'lattice')} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for label in L.names:
        lines.append(f"  {_q(label)};")
    for a, b in L.covers():
        lines.append(f"  {_q(L.names[a])} -> {_q(L.names[b])} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def polarity_dot(pol, name: str = "polarity") -> str:
    lines = [f"digraph {_q(name)} {{", "  rankdir=LR;"]
    for side, labels in (("X", pol.x_names), ("Y", pol.y_names)):
        lines.append(f"  subgraph {_q('cluster_' + side)} {{")
        lines.append(f"    label={_q(side)};")
        for label in labels:
            lines.append(f"    {_q(side + ':' + label)} [label={_q(label)}];")
        lines.append("  }")
    for x in range(pol.nx):
        for y in range(pol.ny):
            if pol.related(x, y):
                lines.append(f"  {_q('X:' + pol.x_names[x])} -> {_q('Y:' + pol.y_names[y])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
