"""Hypergraphs with edges of size 2 or 3, and their modules.

A set ``M`` of vertices is a module when every edge crossing ``M`` meets it
in exactly one vertex ``m`` and swapping ``m`` for any other member of ``M``
yields an edge again.

Internally vertex sets are bitmasks (bit ``v`` for vertex ``v``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .config import bounds
from .errors import CapacityError, CounterexampleError, InputError

Edge = tuple  # sorted tuple of vertex ids


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Hypergraph:
    """Vertices ``0..n-1`` and a set of 2- or 3-element edges.

    Edges may be passed as any iterables; they are stored as sorted tuples.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"vertex count must be non-negative, got {self.n}")
        canon = set()
        for e in self.edges:
            t = tuple(sorted(e))
            if len(t) not in (2, 3) or len(set(t)) != len(t):
                raise InputError(f"edge {e!r} must have 2 or 3 distinct vertices")
            if t[0] < 0 or t[-1] >= self.n:
                raise InputError(f"edge {e!r} has a vertex outside 0..{self.n - 1}")
            canon.add(t)
        object.__setattr__(self, "edges", frozenset(canon))

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def is_3uniform(self) -> bool:
        return all(len(e) == 3 for e in self.edges)

    def sorted_edges(self) -> list:
        return sorted(self.edges, key=lambda e: (len(e), e))

    @cached_property
    def edge_masks(self) -> tuple:
        return tuple(to_mask(e) for e in sorted(self.edges))

    @cached_property
    def edge_mask_set(self) -> frozenset:
        return frozenset(self.edge_masks)

    @cached_property
    def _completions(self) -> dict:
        # (edge minus one vertex) -> mask of vertices completing it to an edge
        comp: dict = {}
        for e in self.edge_masks:
            for v in bits(e):
                rest = e ^ (1 << v)
                comp[rest] = comp.get(rest, 0) | (1 << v)
        return comp

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def __contains__(self, e) -> bool:
        return tuple(sorted(e)) in self.edges


@dataclass(frozen=True)
class ExtensionPartition:
    """Classification of the vertices outside a prime set ``X``.

    ``per_y[y]`` holds the vertices ``v`` for which ``{y, v}`` is a module of
    ``H[X + v]``. Vertices fitting no class land in ``unclassified``.
    """

    x: frozenset
    ext: frozenset
    bracket: frozenset
    per_y: dict
    underline_x: frozenset
    unclassified: frozenset

    def classes(self) -> list:
        return [self.ext, self.bracket] + [self.per_y[y] for y in sorted(self.per_y)]

    def is_disjoint(self) -> bool:
        seen = set()
        for cls in self.classes():
            if seen & cls:
                return False
            seen |= cls
        return True


def _check_vertex_set(h: Hypergraph, m) -> int:
    mask = 0
    for v in m:
        if not isinstance(v, int) or v < 0 or v >= h.n:
            raise InputError(f"vertex {v!r} outside 0..{h.n - 1}")
        mask |= 1 << v
    return mask


def is_module_mask(h: Hypergraph, m: int, within: int | None = None) -> bool:
    """Module test on bitmask ``m``, optionally in the subhypergraph on ``within``."""
    comp = h._completions
    for e in h.edge_masks:
        if within is not None and e & ~within:
            continue
        inter = e & m
        if not inter or inter == e:
            continue
        if inter & (inter - 1):
            return False
        rest = e ^ inter
        # e meets m in one vertex, so each swap keeps the edge size
        assert not rest & m
        target = m if within is None else m & within
        if target & ~comp.get(rest, 0):
            return False
    return True


def is_module(h: Hypergraph, m: Iterable[int]) -> bool:
    return is_module_mask(h, _check_vertex_set(h, m))


def module_closure(h: Hypergraph, seed: int, within: int | None = None) -> int:
    """Smallest module of ``h`` (or of ``h[within]``) containing ``seed``.

    A crossing edge that violates the module condition forces all of its
    outside vertices into every module containing the current set, so the
    closure is unique.
    """
    comp = h._completions
    masks = h.edge_masks if within is None else [e for e in h.edge_masks if not e & ~within]
    m = seed
    changed = True
    while changed:
        changed = False
        for e in masks:
            inter = e & m
            if not inter or inter == e:
                continue
            if inter & (inter - 1) or m & ~comp.get(e ^ inter, 0):
                m |= e
                changed = True
    return m


def is_prime_mask(h: Hypergraph, within: int) -> bool:
    """Primality of the subhypergraph induced by the bitmask ``within``."""
    verts = list(bits(within))
    if len(verts) < 3:
        return False
    for a, b in combinations(verts, 2):
        if module_closure(h, (1 << a) | (1 << b), within) != within:
            return False
    return True


def is_prime(h: Hypergraph) -> bool:
    return is_prime_mask(h, h.full_mask)


def nontrivial_modules(h: Hypergraph, limit: int | None = None) -> list:
    """All modules ``M`` with ``2 <= |M| <= n - 1``, by size then lexicographically."""
    limit = bounds().max_module_n if limit is None else limit
    if h.n > limit:
        raise CapacityError(f"module enumeration over 2**{h.n} subsets exceeds bound n <= {limit}")
    found = []
    for size in range(2, h.n):
        for m in combinations(range(h.n), size):
            if is_module_mask(h, to_mask(m)):
                found.append(m)
    return found


def is_critical(h: Hypergraph) -> bool:
    full = h.full_mask
    if not is_prime_mask(h, full):
        return False
    return not any(is_prime_mask(h, full & ~(1 << v)) for v in range(h.n))


def induced(h: Hypergraph, w: Iterable[int]):
    """Subhypergraph induced by ``w``, relabelled ``0..|w|-1`` in increasing order.

    Returns ``(sub, labels)`` where ``labels[i]`` is the original vertex of
    new vertex ``i``.
    """
    mask = _check_vertex_set(h, w)
    labels = tuple(bits(mask))
    index = {v: i for i, v in enumerate(labels)}
    edges = [tuple(index[v] for v in e) for e in h.edges if all(v in index for v in e)]
    return Hypergraph(len(labels), frozenset(edges)), labels


def remove(h: Hypergraph, vs: Iterable[int]):
    """``h - vs`` with relabelling, as returned by :func:`induced`."""
    drop = set(vs)
    return induced(h, [v for v in range(h.n) if v not in drop])


def extension_partition(h: Hypergraph, x: Iterable[int]) -> ExtensionPartition:
    xmask = _check_vertex_set(h, x)
    if xmask == h.full_mask:
        raise InputError("X must be a proper subset of V(H)")
    if not is_prime_mask(h, xmask):
        raise InputError("H[X] must be prime")
    ext, bracket, unclassified = set(), set(), set()
    per_y = {y: set() for y in bits(xmask)}
    for v in range(h.n):
        if xmask >> v & 1:
            continue
        within = xmask | (1 << v)
        placed = False
        if is_prime_mask(h, within):
            ext.add(v)
            placed = True
        if is_module_mask(h, xmask, within):
            bracket.add(v)
            placed = True
        for y in per_y:
            if is_module_mask(h, (1 << y) | (1 << v), within):
                per_y[y].add(v)
                placed = True
        if not placed:
            unclassified.add(v)
    return ExtensionPartition(
        x=frozenset(bits(xmask)),
        ext=frozenset(ext),
        bracket=frozenset(bracket),
        per_y={y: frozenset(s) for y, s in per_y.items()},
        underline_x=frozenset(y for y, s in per_y.items() if s),
        unclassified=frozenset(unclassified),
    )


def check_two_vertex_removal(h: Hypergraph, candidates: Iterable[int] | None = None,
                             allow_equal: bool = True):
    """Find ``(v, w)`` with ``h - {v, w}`` prime.

    Distinct pairs are searched first, lexicographically; with
    ``allow_equal`` a single deletion ``(v, v)`` is accepted when no distinct
    pair works. ``candidates`` restricts where the pair is looked for.
    Raises :class:`CounterexampleError` when nothing is found, since every
    prime 3-hypergraph on at least 4 vertices is known to have such a pair.
    """
    if h.n < 4:
        raise InputError("need at least 4 vertices")
    if not is_prime(h):
        raise InputError("hypergraph is not prime")
    pool = sorted(set(range(h.n) if candidates is None else candidates))
    full = h.full_mask
    for v, w in combinations(pool, 2):
        if is_prime_mask(h, full & ~(1 << v) & ~(1 << w)):
            return v, w
    if allow_equal:
        for v in pool:
            if is_prime_mask(h, full & ~(1 << v)):
                return v, v
    raise CounterexampleError(f"no prime deletion of a pair from {pool}", h)
