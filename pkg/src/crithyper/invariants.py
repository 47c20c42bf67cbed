"""Executable structural invariants of Γ•ℍ and of prime restrictions.

Each check returns a list of failure descriptions; an empty list means the
invariant held on that input.
"""

from __future__ import annotations

from .construction import ConstructionInput, OverlineMap, build
from .criteria import is_connected, is_module_of_script_h, script_h_modules
from .hypergraph import (Hypergraph, extension_partition, is_module, is_module_mask, is_prime_mask,
                         nontrivial_modules, to_mask)


def _script_h_components(sh: Hypergraph) -> list:
    parent = list(range(sh.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in sh.edges:
        for v in e[1:]:
            parent[find(v)] = find(e[0])
    groups: dict = {}
    for v in range(sh.n):
        groups.setdefault(find(v), set()).add(v)
    return [frozenset(g) for g in sorted(groups.values(), key=min)]


def component_modules(inp: ConstructionInput, h: Hypergraph | None = None) -> list:
    """Each component of ℍ lifts to a module of Γ•ℍ, and so does its complement."""
    h = build(inp) if h is None else h
    lift = OverlineMap(inp.comps)
    out = []
    for comp in _script_h_components(inp.script_h):
        inside = lift.to_vertices(comp)
        for m in (inside, frozenset(range(h.n)) - inside):
            if not is_module(h, m):
                out.append(f"{sorted(m)} (from ℍ-component {sorted(comp)}) is not a module")
    return out


def edge_restrictions_prime(inp: ConstructionInput, h: Hypergraph | None = None) -> list:
    """The restriction to the lift of every ℍ-edge is prime."""
    h = build(inp) if h is None else h
    lift = OverlineMap(inp.comps)
    return [f"restriction to lift of {list(e)} is not prime"
            for e in inp.script_h.sorted_edges()
            if not is_prime_mask(h, to_mask(lift.to_vertices(e)))]


def module_lifting(inp: ConstructionInput, h: Hypergraph | None = None) -> list:
    """With ℍ connected, nontrivial modules of Γ•ℍ are unions of whole components.

    The projected set has at least two components, is a module of ℍ, and
    only contains singleton components.
    """
    if not is_connected(inp.script_h):
        return []
    h = build(inp) if h is None else h
    lift = OverlineMap(inp.comps)
    singles = inp.singleton_components()
    out = []
    for m in nontrivial_modules(h):
        proj = lift.to_components(m)
        if lift.to_vertices(proj) != frozenset(m):
            out.append(f"module {list(m)} is not a union of components")
        if len(proj) < 2:
            out.append(f"module {list(m)} meets fewer than 2 components")
        if not is_module_of_script_h(inp.script_h, proj):
            out.append(f"module {list(m)} does not project to a module of ℍ")
        if not proj <= singles:
            out.append(f"module {list(m)} leaves the singleton components")
    return out


def singleton_module_lifting(inp: ConstructionInput, h: Hypergraph | None = None) -> list:
    """A module of ℍ made of singleton components lifts to a module of Γ•ℍ."""
    h = build(inp) if h is None else h
    lift = OverlineMap(inp.comps)
    singles = inp.singleton_components()
    return [f"ℍ-module {list(mod)} does not lift"
            for mod in script_h_modules(inp.script_h, within=singles)
            if not is_module(h, lift.to_vertices(mod))]


def script_h_module_parity(inp: ConstructionInput) -> list:
    """With ℍ connected, nontrivial modules of ℍ are all-even or all-odd."""
    if not is_connected(inp.script_h):
        return []
    even = inp.even_components()
    return [f"ℍ-module {list(mod)} mixes parities"
            for mod in script_h_modules(inp.script_h)
            if not (set(mod) <= even or not set(mod) & even)]


def _module_in_removal(h: Hypergraph, removed: int, m) -> bool:
    within = h.full_mask & ~(1 << removed)
    return is_module_mask(h, to_mask(m), within)


def path_vertex_modules(inp: ConstructionInput, h: Hypergraph | None = None) -> list:
    """Modules of Γ•ℍ minus one vertex of a non-singleton path component.

    Removing an endpoint leaves everything but the endpoint's neighbour as a
    module; removing an inner vertex at position ``m`` makes the two path
    neighbours a module. For odd paths the inner positions run over
    ``1..2w-1``; for even paths over ``1..2w-2``.
    """
    h = build(inp) if h is None else h
    everything = frozenset(range(h.n))
    out = []
    for i, c in enumerate(inp.comps):
        if c.is_singleton:
            continue
        phi, last = c.phi, c.size - 1
        checks = [(phi[0], everything - {phi[0], phi[1]}),
                  (phi[last], everything - {phi[last - 1], phi[last]})]
        checks += [(phi[m], {phi[m - 1], phi[m + 1]}) for m in range(1, last)]
        for removed, m in checks:
            if not _module_in_removal(h, removed, m):
                out.append(f"component {i}: {sorted(m)} is not a module after removing {removed}")
    return out


def same_block(h: Hypergraph, x) -> list:
    """How each nontrivial module of ``h`` meets a prime restriction ``h[x]``.

    It misses ``x`` and sits in one class of the extension partition, or
    contains ``x`` with its complement inside the bracket class, or meets
    ``x`` in a single ``y`` with the rest inside the class of ``y``.
    """
    part = extension_partition(h, x)
    xs = part.x
    blocks = part.classes()
    out = []
    for m in nontrivial_modules(h):
        ms = frozenset(m)
        meet = ms & xs
        if not meet:
            if not any(ms <= b for b in blocks):
                out.append(f"module {list(m)} is spread over several classes")
        elif meet == xs:
            if not frozenset(range(h.n)) - ms <= part.bracket:
                out.append(f"module {list(m)} contains X but its complement leaves the bracket class")
        elif len(meet) == 1:
            (y,) = meet
            if not ms - {y} <= part.per_y[y]:
                out.append(f"module {list(m)} meets X in {y} but leaves its class")
        else:
            out.append(f"module {list(m)} meets X in {sorted(meet)}")
    return out


def all_construction_invariants(inp: ConstructionInput) -> dict:
    h = build(inp)
    return {
        "component_modules": component_modules(inp, h),
        "edge_restrictions_prime": edge_restrictions_prime(inp, h),
        "module_lifting": module_lifting(inp, h),
        "singleton_module_lifting": singleton_module_lifting(inp, h),
        "script_h_module_parity": script_h_module_parity(inp),
        "path_vertex_modules": path_vertex_modules(inp, h),
    }


__all__ = [
    "component_modules", "edge_restrictions_prime", "module_lifting", "singleton_module_lifting",
    "script_h_module_parity", "path_vertex_modules", "same_block", "all_construction_invariants",
]
