"""Text and JSON formats for hypergraphs, tournaments, graphs and construction inputs.

Text formats start with the vertex count on line 1, followed by one edge or
arc per line. Any document whose first non-blank character is ``{`` is read
as JSON.
"""

from __future__ import annotations

import json
from itertools import combinations

from .construction import ConstructionInput
from .errors import InputError
from .graphs import SimpleGraph
from .hypergraph import Hypergraph
from .tournaments import Tournament

SECTIONS = ("gamma", "scripth", "phi")


def _lines(text: str) -> list:
    return [ln.strip() for ln in text.splitlines() if ln.strip()]


def _ints(line: str) -> list:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError as exc:
        raise InputError(f"expected integers, got {line!r}") from exc


def _header(lines: list) -> int:
    if not lines:
        raise InputError("empty input")
    head = _ints(lines[0])
    if len(head) != 1 or head[0] < 0:
        raise InputError(f"first line must be a vertex count, got {lines[0]!r}")
    return head[0]


def _check_edge_list(n: int, rows, sizes, what: str) -> list:
    seen = set()
    for row in rows:
        row = list(row)
        if len(row) not in sizes:
            raise InputError(f"{what} {row} must have {' or '.join(map(str, sizes))} vertices")
        if any(not isinstance(v, int) or isinstance(v, bool) for v in row):
            raise InputError(f"{what} {row} must contain integers")
        if any(a >= b for a, b in zip(row, row[1:])):
            raise InputError(f"{what} {row} is not strictly ascending")
        if row[0] < 0 or row[-1] >= n:
            raise InputError(f"{what} {row} has a vertex outside 0..{n - 1}")
        t = tuple(row)
        if t in seen:
            raise InputError(f"duplicate {what} {row}")
        seen.add(t)
    return sorted(seen)


def _is_json(text: str) -> bool:
    return text.lstrip().startswith("{")


def _load_json(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("JSON document must be an object")
    return data


def _json_n(data: dict) -> int:
    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InputError("JSON field 'n' must be a non-negative integer")
    return n


# hypergraphs ----------------------------------------------------------------


def parse_hypergraph(text: str) -> Hypergraph:
    if _is_json(text):
        return hypergraph_from_json(_load_json(text))
    lines = _lines(text)
    n = _header(lines)
    rows = _check_edge_list(n, (_ints(ln) for ln in lines[1:]), (2, 3), "edge")
    return Hypergraph(n, frozenset(rows))


def hypergraph_from_json(data: dict) -> Hypergraph:
    n = _json_n(data)
    edges = data.get("edges", [])
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise InputError("JSON field 'edges' must be a list of lists")
    return Hypergraph(n, frozenset(_check_edge_list(n, edges, (2, 3), "edge")))


def format_hypergraph(h: Hypergraph) -> str:
    out = [str(h.n)] + [" ".join(map(str, e)) for e in sorted(h.edges)]
    return "\n".join(out) + "\n"


def hypergraph_to_json(h: Hypergraph) -> dict:
    return {"n": h.n, "edges": [list(e) for e in sorted(h.edges)]}


# tournaments ----------------------------------------------------------------


def _tournament_from_arcs(n: int, arcs) -> Tournament:
    arcs = [tuple(a) for a in arcs]
    if any(len(a) != 2 for a in arcs):
        raise InputError("each arc must be a pair 'i j'")
    expected = list(combinations(range(n), 2))
    pairs = [tuple(sorted(a)) for a in arcs]
    if pairs != expected:
        raise InputError("arcs must cover each pair once, in lexicographic order of {min, max}")
    return Tournament(n, frozenset(arcs))


def parse_tournament(text: str) -> Tournament:
    if _is_json(text):
        return tournament_from_json(_load_json(text))
    lines = _lines(text)
    n = _header(lines)
    return _tournament_from_arcs(n, (_ints(ln) for ln in lines[1:]))


def tournament_from_json(data: dict) -> Tournament:
    n = _json_n(data)
    arcs = data.get("arcs", [])
    if not isinstance(arcs, list):
        raise InputError("JSON field 'arcs' must be a list")
    return _tournament_from_arcs(n, arcs)


def format_tournament(t: Tournament) -> str:
    return "\n".join([str(t.n)] + [f"{i} {j}" for i, j in t.sorted_arcs()]) + "\n"


def tournament_to_json(t: Tournament) -> dict:
    return {"n": t.n, "arcs": [list(a) for a in t.sorted_arcs()]}


# graphs ---------------------------------------------------------------------


def parse_graph(text: str) -> SimpleGraph:
    if _is_json(text):
        return graph_from_json(_load_json(text))
    lines = _lines(text)
    n = _header(lines)
    return SimpleGraph(n, frozenset(_check_edge_list(n, (_ints(ln) for ln in lines[1:]), (2,), "edge")))


def graph_from_json(data: dict) -> SimpleGraph:
    n = _json_n(data)
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise InputError("JSON field 'edges' must be a list")
    return SimpleGraph(n, frozenset(_check_edge_list(n, edges, (2,), "edge")))


def format_graph(g: SimpleGraph) -> str:
    return "\n".join([str(g.n)] + [f"{a} {b}" for a, b in sorted(g.edges)]) + "\n"


def graph_to_json(g: SimpleGraph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}


# construction inputs ----------------------------------------------------------


def _input_from_parts(gamma: SimpleGraph, script_h: Hypergraph, phi_pairs) -> ConstructionInput:
    phi0 = {}
    for pair in phi_pairs:
        if len(pair) != 2:
            raise InputError("phi entries are 'component endpoint' pairs")
        comp, start = pair
        if comp in phi0:
            raise InputError(f"duplicate phi entry for component {comp}")
        phi0[comp] = start
    ncomp = len(gamma.components())
    if any(not 0 <= c < ncomp for c in phi0):
        raise InputError("phi refers to a component that does not exist")
    return ConstructionInput.from_orientation(gamma, script_h, phi0)


def parse_construction_input(text: str) -> ConstructionInput:
    """Sections introduced by a line ``gamma``, ``scripth`` or ``phi``."""
    if _is_json(text):
        return construction_input_from_json(_load_json(text))
    sections, current = {}, None
    for ln in _lines(text):
        if ln in SECTIONS:
            if ln in sections:
                raise InputError(f"duplicate section {ln!r}")
            current = ln
            sections[current] = []
        elif current is None:
            raise InputError("construction input must start with a section name")
        else:
            sections[current].append(ln)
    for required in ("gamma", "scripth"):
        if required not in sections:
            raise InputError(f"missing section {required!r}")
    gamma = parse_graph("\n".join(sections["gamma"]))
    script_h = parse_hypergraph("\n".join(sections["scripth"]))
    phi = [_ints(ln) for ln in sections.get("phi", [])]
    return _input_from_parts(gamma, script_h, phi)


def construction_input_from_json(data: dict) -> ConstructionInput:
    for required in ("gamma", "scripth"):
        if not isinstance(data.get(required), dict):
            raise InputError(f"JSON field {required!r} must be an object")
    gamma = graph_from_json(data["gamma"])
    script_h = hypergraph_from_json(data["scripth"])
    return _input_from_parts(gamma, script_h, data.get("phi", []))


def _phi_pairs(inp: ConstructionInput) -> list:
    return [[i, c.phi[0]] for i, c in enumerate(inp.comps) if c.phi and c.size > 1]


def format_construction_input(inp: ConstructionInput) -> str:
    parts = ["gamma", format_graph(inp.gamma).rstrip("\n"),
             "scripth", format_hypergraph(inp.script_h).rstrip("\n")]
    pairs = _phi_pairs(inp)
    if pairs:
        parts += ["phi"] + [f"{c} {v}" for c, v in pairs]
    return "\n".join(parts) + "\n"


def construction_input_to_json(inp: ConstructionInput) -> dict:
    return {"gamma": graph_to_json(inp.gamma), "scripth": hypergraph_to_json(inp.script_h),
            "phi": _phi_pairs(inp)}
