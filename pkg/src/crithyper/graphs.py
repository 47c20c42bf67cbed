"""Simple graphs, primality graphs and their component structure."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .config import bounds
from .errors import CapacityError, CounterexampleError, InputError
from .hypergraph import Hypergraph, is_critical, is_module, is_prime, is_prime_mask, remove


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        canon = set()
        for e in self.edges:
            a, b = sorted(e)
            if a == b:
                raise InputError(f"loop at {a}")
            if a < 0 or b >= self.n:
                raise InputError(f"edge {e!r} outside 0..{self.n - 1}")
            canon.add((a, b))
        object.__setattr__(self, "edges", frozenset(canon))

    @cached_property
    def adjacency(self) -> tuple:
        adj = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return tuple(frozenset(s) for s in adj)

    def neighbors(self, v: int) -> frozenset:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def components(self) -> list:
        """Vertex sets of the connected components, ordered by smallest vertex."""
        seen, comps = set(), []
        for s in range(self.n):
            if s in seen:
                continue
            stack, comp = [s], {s}
            while stack:
                u = stack.pop()
                for w in self.adjacency[u]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return comps


def path_graph(n: int, offset: int = 0, total: int | None = None) -> SimpleGraph:
    total = offset + n if total is None else total
    return SimpleGraph(total, frozenset((offset + k, offset + k + 1) for k in range(n - 1)))


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, path_graph(n).edges | {(0, n - 1)})


def disjoint_paths(sizes) -> SimpleGraph:
    """Paths of the given sizes laid out on consecutive vertex ranges."""
    edges, offset = set(), 0
    for s in sizes:
        edges |= {(offset + k, offset + k + 1) for k in range(s - 1)}
        offset += s
    return SimpleGraph(offset, frozenset(edges))


@dataclass(frozen=True)
class ComponentMeta:
    """One component ``C`` with its kind, parity, weight ``w(C)`` and path labelling.

    ``phi[k]`` is the vertex at position ``k`` along the path.
    """

    vertices: frozenset
    kind: str  # "path", "cycle" or "other"
    phi: tuple | None = None

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def parity(self) -> str:
        return "even" if self.size % 2 == 0 else "odd"

    @property
    def is_even(self) -> bool:
        return self.size % 2 == 0

    @property
    def is_singleton(self) -> bool:
        return self.size == 1

    @property
    def weight(self) -> int:
        return self.size // 2

    @property
    def min_vertex(self) -> int:
        return min(self.vertices)

    def flipped(self) -> "ComponentMeta":
        return ComponentMeta(self.vertices, self.kind, tuple(reversed(self.phi)))


def _path_labelling(g: SimpleGraph, comp: frozenset):
    if len(comp) == 1:
        return tuple(comp)
    ends = sorted(v for v in comp if g.degree(v) == 1)
    order, prev = [ends[0]], None
    while len(order) < len(comp):
        cur = order[-1]
        (nxt,) = [w for w in g.neighbors(cur) if w != prev]
        prev = cur
        order.append(nxt)
    return tuple(order)


def classify_components(g: SimpleGraph) -> list:
    """Components ordered by smallest vertex; paths start at their smaller endpoint."""
    metas = []
    for comp in g.components():
        n_edges = sum(1 for a, b in g.edges if a in comp)
        max_deg = max(g.degree(v) for v in comp)
        if n_edges == len(comp) - 1 and max_deg <= 2:
            metas.append(ComponentMeta(comp, "path", _path_labelling(g, comp)))
        elif len(comp) >= 3 and n_edges == len(comp) and max_deg == 2:
            metas.append(ComponentMeta(comp, "cycle"))
        else:
            metas.append(ComponentMeta(comp, "other"))
    return metas


def primality_graph(h: Hypergraph, check: bool = True) -> SimpleGraph:
    """Join ``v`` and ``w`` whenever ``h - {v, w}`` is prime."""
    if h.n < 5:
        raise InputError("primality graph needs at least 5 vertices")
    if check and not is_prime(h):
        raise InputError("primality graph is defined for prime hypergraphs only")
    full = h.full_mask
    edges = [
        (v, w) for v, w in combinations(range(h.n), 2)
        if is_prime_mask(h, full & ~(1 << v) & ~(1 << w))
    ]
    return SimpleGraph(h.n, frozenset(edges))


def verify_degree_lemma(h: Hypergraph, pgraph: SimpleGraph | None = None) -> list:
    """Degree bound and neighbourhood modules of a critical hypergraph.

    Returns a list of failure descriptions; empty means every check held.
    """
    g = primality_graph(h) if pgraph is None else pgraph
    failures = []
    for v in range(h.n):
        nb = g.neighbors(v)
        if len(nb) > 2:
            failures.append(f"vertex {v} has degree {len(nb)}")
            continue
        if len(nb) == 1:
            target = set(range(h.n)) - {v} - nb
        elif len(nb) == 2:
            target = set(nb)
        else:
            continue
        sub, labels = remove(h, [v])
        index = {u: i for i, u in enumerate(labels)}
        if not is_module(sub, [index[u] for u in target]):
            failures.append(f"vertex {v}: {sorted(target)} is not a module of H-{v}")
    return failures


def has_cycle_component(g: SimpleGraph) -> bool:
    return any(c.kind == "cycle" for c in classify_components(g))


class _IsoSearch:
    """Backtracking isomorphism search over {2,3}-hypergraphs.

    Candidates are tried in increasing order and pruning only discards
    infeasible partial maps, so the first witness found is the
    lexicographically smallest one.
    """

    def __init__(self, h1: Hypergraph, h2: Hypergraph):
        self.n = h1.n
        self.e1, self.e2 = h1.edges, h2.edges
        self.sig1 = [self._signature(h1, v) for v in range(h1.n)]
        self.sig2 = [self._signature(h2, v) for v in range(h2.n)]

    @staticmethod
    def _signature(h, v):
        return (sum(1 for e in h.edges if v in e and len(e) == 2),
                sum(1 for e in h.edges if v in e and len(e) == 3))

    def run(self):
        perm, used = [], [False] * self.n
        return self._extend(perm, used)

    def _extend(self, perm, used):
        k = len(perm)
        if k == self.n:
            return tuple(perm)
        for c in range(self.n):
            if used[c] or self.sig1[k] != self.sig2[c]:
                continue
            if not self._consistent(perm, k, c):
                continue
            perm.append(c)
            used[c] = True
            found = self._extend(perm, used)
            if found is not None:
                return found
            perm.pop()
            used[c] = False
        return None

    def _consistent(self, perm, k, c):
        for a in range(k):
            pa = perm[a]
            if ((a, k) in self.e1) != (tuple(sorted((pa, c))) in self.e2):
                return False
            for b in range(a + 1, k):
                if ((a, b, k) in self.e1) != (tuple(sorted((pa, perm[b], c))) in self.e2):
                    return False
        return True


def find_isomorphism(h1: Hypergraph, h2: Hypergraph, limit: int | None = None):
    """Permutation ``p`` with ``p(e)`` in ``E(h2)`` iff ``e`` in ``E(h1)``, or ``None``."""
    limit = bounds().max_iso_n if limit is None else limit
    if max(h1.n, h2.n) > limit:
        raise CapacityError(f"isomorphism search exceeds bound n <= {limit}")
    if h1.n != h2.n or len(h1.edges) != len(h2.edges):
        return None
    if sorted(len(e) for e in h1.edges) != sorted(len(e) for e in h2.edges):
        return None
    return _IsoSearch(h1, h2).run()


def is_isomorphic(h1: Hypergraph, h2: Hypergraph, limit: int | None = None) -> bool:
    return find_isomorphism(h1, h2, limit) is not None


def is_circular(h: Hypergraph, method: str = "both", check: bool = True) -> bool:
    """Whether a critical ``h`` is isomorphic to the C3-structure of ``T_n``.

    ``method`` is ``"fast"`` (cycle component in the primality graph),
    ``"iso"`` (explicit isomorphism search) or ``"both"``, which runs both
    and raises if they disagree.
    """
    from .tournaments import c3_structure, make_T

    if h.n < 5:
        raise InputError("circularity is defined for at least 5 vertices")
    if check and not is_critical(h):
        raise InputError("hypergraph is not critical")
    results = {}
    if method in ("fast", "both"):
        results["fast"] = has_cycle_component(primality_graph(h, check=False))
    if method in ("iso", "both"):
        results["iso"] = h.n % 2 == 1 and is_isomorphic(h, c3_structure(make_T(h.n)))
    if not results:
        raise InputError(f"unknown method {method!r}")
    if len(set(results.values())) > 1:
        raise CounterexampleError(f"circularity tests disagree: {results}", h)
    return next(iter(results.values()))
