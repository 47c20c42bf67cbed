"""Shared strategies and brute-force oracles.

The oracles restate the definitions as directly as possible and share no
code with the package beyond the data types.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from hypothesis import strategies as st

from crithyper.construction import ConstructionInput
from crithyper.enumeration import iter_construction_inputs
from crithyper.graphs import SimpleGraph
from crithyper.hypergraph import Hypergraph
from crithyper.tournaments import Tournament

# filled by the acceptance tests, echoed at the end of the session
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for text in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2])):
            terminalreporter.write_line(text)


def oracle_is_module(edges, n, m) -> bool:
    """Literal module test: crossing edges meet ``m`` once and every swap is an edge."""
    m = set(m)
    edge_sets = {frozenset(e) for e in edges}
    for e in edge_sets:
        inter = e & m
        if not inter or e <= m:
            continue
        if len(inter) != 1:
            return False
        (x,) = inter
        for y in m:
            if (e - {x}) | {y} not in edge_sets:
                return False
    return True


def oracle_modules(h: Hypergraph) -> list:
    return [m for size in range(2, h.n) for m in combinations(range(h.n), size)
            if oracle_is_module(h.edges, h.n, m)]


def oracle_is_prime(h: Hypergraph) -> bool:
    return h.n >= 3 and not oracle_modules(h)


def oracle_restrict(h: Hypergraph, keep) -> Hypergraph:
    keep = sorted(keep)
    index = {v: i for i, v in enumerate(keep)}
    return Hypergraph(len(keep), frozenset(tuple(index[v] for v in e) for e in h.edges if set(e) <= set(keep)))


def oracle_is_critical(h: Hypergraph) -> bool:
    if not oracle_is_prime(h):
        return False
    return all(not oracle_is_prime(oracle_restrict(h, set(range(h.n)) - {v})) for v in range(h.n))


def oracle_c3(t: Tournament) -> set:
    """Triples inducing a directed 3-cycle, by checking both cyclic orders."""
    out = set()
    for a, b, c in combinations(range(t.n), 3):
        if {(a, b), (b, c), (c, a)} <= t.arcs or {(b, a), (c, b), (a, c)} <= t.arcs:
            out.add((a, b, c))
    return out


def oracle_tournament_prime(t: Tournament) -> bool:
    """No interval other than trivial ones: every outside vertex sees ``m`` uniformly."""
    if t.n < 3:
        return False
    for size in range(2, t.n):
        for m in combinations(range(t.n), size):
            if all(all((v, x) in t.arcs for x in m) or all((x, v) in t.arcs for x in m)
                   for v in range(t.n) if v not in m):
                return False
    return True


def oracle_isomorphic(h1: Hypergraph, h2: Hypergraph) -> bool:
    if h1.n != h2.n or len(h1.edges) != len(h2.edges):
        return False
    target = {frozenset(e) for e in h2.edges}
    return any({frozenset(p[v] for v in e) for e in h1.edges} == target for p in permutations(range(h1.n)))


def relabel(h: Hypergraph, perm) -> Hypergraph:
    return Hypergraph(h.n, frozenset(tuple(perm[v] for v in e) for e in h.edges))


@st.composite
def three_hypergraphs(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    triples = list(combinations(range(n), 3))
    chosen = draw(st.lists(st.sampled_from(triples), unique=True) if triples else st.just([]))
    return Hypergraph(n, frozenset(chosen))


@st.composite
def mixed_hypergraphs(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    cands = list(combinations(range(n), 2)) + list(combinations(range(n), 3))
    chosen = draw(st.lists(st.sampled_from(cands), unique=True) if cands else st.just([]))
    return Hypergraph(n, frozenset(chosen))


@st.composite
def tournaments(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return Tournament.from_mask(n, mask)


@lru_cache(maxsize=None)
def valid_inputs(max_vertices=8) -> tuple:
    return tuple(iter_construction_inputs(5, max_vertices, 4))


@st.composite
def construction_inputs(draw, max_vertices=8):
    """A valid input, with its paths scattered over a random vertex labelling."""
    base = draw(st.sampled_from(valid_inputs(max_vertices)))
    perm = draw(st.permutations(range(base.n)))
    gamma = SimpleGraph(base.n, frozenset((perm[a], perm[b]) for a, b in base.gamma.edges))
    # component order follows the smallest vertex, so re-index script_h accordingly
    old_comps = [frozenset(perm[v] for v in c.vertices) for c in base.comps]
    new_inp = ConstructionInput(gamma, Hypergraph(base.script_h.n, frozenset()))
    pos = {c.vertices: i for i, c in enumerate(new_inp.comps)}
    remap = [pos[c] for c in old_comps]
    sh = Hypergraph(base.script_h.n, frozenset(tuple(remap[v] for v in e) for e in base.script_h.edges))
    return ConstructionInput(gamma, sh)
