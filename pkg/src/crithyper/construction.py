"""The Γ•ℍ construction and its inverse.

``gamma`` is a disjoint union of paths; ``script_h`` is a {2,3}-hypergraph
whose vertex ``i`` stands for the ``i``-th component of ``gamma`` (components
ordered by smallest vertex).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import CounterexampleError, InputError
from .graphs import ComponentMeta, SimpleGraph, classify_components, primality_graph
from .hypergraph import Hypergraph, is_critical
from .tournaments import c3_structure, make_U, make_W


@dataclass(frozen=True)
class ConstructionInput:
    gamma: SimpleGraph
    script_h: Hypergraph
    comps: tuple = None

    def __post_init__(self):
        comps = classify_components(self.gamma) if self.comps is None else self.comps
        object.__setattr__(self, "comps", tuple(comps))
        if self.script_h.n != len(self.comps):
            raise InputError(
                f"script_h has {self.script_h.n} vertices but gamma has {len(self.comps)} components"
            )

    @classmethod
    def from_orientation(cls, gamma: SimpleGraph, script_h: Hypergraph, phi0: dict | None = None):
        """Build with ``phi0[i]`` choosing the starting endpoint of component ``i``."""
        comps = classify_components(gamma)
        for i, start in (phi0 or {}).items():
            c = comps[i]
            if c.kind != "path" or start not in (c.phi[0], c.phi[-1]):
                raise InputError(f"vertex {start} is not an endpoint of path component {i}")
            if start != c.phi[0]:
                comps[i] = c.flipped()
        return cls(gamma, script_h, tuple(comps))

    def with_flips(self, flips) -> "ConstructionInput":
        comps = tuple(c.flipped() if f and c.phi else c for c, f in zip(self.comps, flips))
        return ConstructionInput(self.gamma, self.script_h, comps)

    @property
    def n(self) -> int:
        return self.gamma.n

    def singleton_components(self) -> frozenset:
        return frozenset(i for i, c in enumerate(self.comps) if c.is_singleton)

    def even_components(self) -> frozenset:
        return frozenset(i for i, c in enumerate(self.comps) if c.is_even)

    def odd_components(self) -> frozenset:
        return frozenset(i for i, c in enumerate(self.comps) if not c.is_even)


class OverlineMap:
    """Lift component sets to vertex sets and project vertex sets to components."""

    def __init__(self, comps):
        self.comps = tuple(comps)
        self._owner = {v: i for i, c in enumerate(self.comps) for v in c.vertices}

    def to_vertices(self, component_set) -> frozenset:
        out = set()
        for i in component_set:
            out |= self.comps[i].vertices
        return frozenset(out)

    def to_components(self, vertex_set) -> frozenset:
        return frozenset(self._owner[v] for v in vertex_set)


def validate(inp: ConstructionInput) -> list:
    """Every violated clause of the path, component and edge conditions."""
    problems = []
    comps, n = inp.comps, inp.n
    for i, c in enumerate(comps):
        if c.kind != "path":
            problems.append(f"(1) component {i} {sorted(c.vertices)} is a {c.kind}, not a path")
    big = [i for i, c in enumerate(comps) if not c.is_singleton]
    if not big:
        problems.append("(2a) every component of gamma is a single vertex")
    for i, c in enumerate(comps):
        others_big = [j for j in big if j != i]
        rest = n - c.size
        if not c.is_even and rest > 0 and not others_big:
            problems.append(f"(2b) odd component {i} needs another non-singleton component")
        if c.is_even and rest >= 2 and not others_big:
            problems.append(f"(2c) even component {i} needs another non-singleton component")
    for e in inp.script_h.sorted_edges():
        if len(e) == 2:
            parities = {comps[i].is_even for i in e}
            if parities != {True, False}:
                problems.append(f"(3b) pair edge {list(e)} must join an even and an odd component")
        elif len(e) == 3:
            if any(comps[i].is_even for i in e):
                problems.append(f"(3c) triple edge {list(e)} must lie in odd components")
        else:
            problems.append(f"(3a) edge {list(e)} has size {len(e)}")
    return problems


def _odd_component_edges(c: ComponentMeta) -> set:
    u = c3_structure(make_U(c.size))
    return {frozenset(c.phi[k] for k in e) for e in u.edges}


def _pair_edges(c: ComponentMeta, d: ComponentMeta) -> set:
    out = set()
    for i in range(c.weight):
        for j in range(i, c.weight):
            for k in range(d.weight + 1):
                out.add(frozenset((c.phi[2 * i], c.phi[2 * j + 1], d.phi[2 * k])))
    return out


def _triple_edges(a: ComponentMeta, b: ComponentMeta, c: ComponentMeta) -> set:
    return {
        frozenset((a.phi[2 * i], b.phi[2 * j], c.phi[2 * k]))
        for i in range(a.weight + 1)
        for j in range(b.weight + 1)
        for k in range(c.weight + 1)
    }


def build_parts(inp: ConstructionInput, check: bool = True) -> dict:
    """Edge sets keyed by their origin: ``("C", i)`` or ``("eps", edge)``."""
    if check:
        problems = validate(inp)
        if problems:
            raise InputError("invalid construction input: " + "; ".join(problems))
    comps = inp.comps
    parts = {}
    for i, c in enumerate(comps):
        if not c.is_even and not c.is_singleton:
            parts[("C", i)] = _odd_component_edges(c)
    for e in inp.script_h.sorted_edges():
        if len(e) == 2:
            a, b = e
            even, odd = (a, b) if comps[a].is_even else (b, a)
            parts[("eps", e)] = _pair_edges(comps[even], comps[odd])
        else:
            parts[("eps", e)] = _triple_edges(*(comps[i] for i in e))
    return parts


def build(inp: ConstructionInput) -> Hypergraph:
    edges = set()
    for part in build_parts(inp).values():
        edges |= part
    return Hypergraph(inp.n, frozenset(tuple(sorted(e)) for e in edges))


def part_overlaps(inp: ConstructionInput) -> list:
    """Edges produced by more than one part of the union (expected: none)."""
    owner, overlaps = {}, []
    for key, part in build_parts(inp).items():
        for e in part:
            if e in owner:
                overlaps.append((tuple(sorted(e)), owner[e], key))
            else:
                owner[e] = key
    return overlaps


def all_orientations(inp: ConstructionInput):
    """Yield the input under every choice of path direction per component."""
    flippable = [i for i, c in enumerate(inp.comps) if c.size > 1]
    for choice in product((False, True), repeat=len(flippable)):
        flips = [False] * len(inp.comps)
        for i, f in zip(flippable, choice):
            flips[i] = f
        yield inp.with_flips(flips)


def quotient_hypergraph(h: Hypergraph, comps) -> Hypergraph:
    """Component hypergraph read off the edges of ``h``.

    Even ``C`` and odd ``D`` are joined when some edge meets ``C`` twice and
    ``D`` once; three odd components are joined when some edge meets each once.
    """
    owner = {v: i for i, c in enumerate(comps) for v in c.vertices}
    edges = set()
    for e in h.edges:
        hit = {}
        for v in e:
            hit[owner[v]] = hit.get(owner[v], 0) + 1
        if len(hit) == 2:
            (c, kc), (d, kd) = hit.items()
            if kc == 1:
                c, d = d, c
            if comps[c].is_even and not comps[d].is_even:
                edges.add(tuple(sorted((c, d))))
        elif len(hit) == 3 and all(not comps[i].is_even for i in hit):
            edges.add(tuple(sorted(hit)))
    return Hypergraph(len(comps), frozenset(edges))


def decompose(h: Hypergraph, check: bool = True) -> ConstructionInput:
    """Recover ``(gamma, script_h)`` with ``build`` reproducing ``h`` exactly.

    ``gamma`` is the primality graph of ``h``. Raises :class:`InputError` for
    circular or non-critical input and :class:`CounterexampleError` if the
    round trip fails.
    """
    if h.n < 5:
        raise InputError("decompose needs at least 5 vertices")
    if check and not is_critical(h):
        raise InputError("hypergraph is not critical")
    gamma = primality_graph(h, check=False)
    comps = classify_components(gamma)
    kinds = {c.kind for c in comps}
    if "cycle" in kinds:
        raise InputError("hypergraph is circular; it is not of the form gamma * script_h")
    if "other" in kinds:
        raise CounterexampleError("primality graph has a vertex of degree > 2", h)
    inp = ConstructionInput(gamma, quotient_hypergraph(h, comps), tuple(comps))
    problems = validate(inp)
    if problems:
        raise CounterexampleError("recovered input is invalid: " + "; ".join(problems), h)
    if build(inp) != h:
        raise CounterexampleError("decompose/build round trip does not reproduce the hypergraph", h)
    return inp


def psi_extension_holds(inp: ConstructionInput) -> list:
    """Check ``V(C) + phi_D(2k)`` induces a copy of ``C3(W_{v(C)+1})`` for each even ``C``.

    The copy is labelled by ``phi_C`` followed by ``phi_D(2k)``. Returns the
    failing ``(C, D, k)`` triples.
    """
    hb = build(inp)
    failures = []
    for e in inp.script_h.sorted_edges():
        if len(e) != 2:
            continue
        ci, di = e if inp.comps[e[0]].is_even else (e[1], e[0])
        c, d = inp.comps[ci], inp.comps[di]
        if c.weight < 1:
            continue
        w_edges = c3_structure(make_W(c.size + 1)).edges
        for k in range(d.weight + 1):
            psi = list(c.phi) + [d.phi[2 * k]]
            image = {tuple(sorted(psi[x] for x in t)) for t in w_edges}
            chosen = set(psi)
            actual = {t for t in hb.edges if set(t) <= chosen}
            if image != actual:
                failures.append((ci, di, k))
    return failures
