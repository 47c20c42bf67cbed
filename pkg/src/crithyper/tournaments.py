"""Tournaments, the critical families T, U, W and C3-structures.

Compact encoding: the pairs ``i < j`` are listed lexicographically; bit ``k``
of the mask is set iff the ``k``-th pair is oriented ``j -> i``. Mask 0 is
the transitive tournament ``L_n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations

from .config import bounds
from .errors import CapacityError, InputError
from .hypergraph import Hypergraph, bits, is_prime, to_mask


@lru_cache(maxsize=None)
def pair_index(n: int) -> dict:
    return {p: k for k, p in enumerate(combinations(range(n), 2))}


@dataclass(frozen=True)
class Tournament:
    """``arcs`` holds ``(i, j)`` for each arc ``i -> j``."""

    n: int
    arcs: frozenset

    def __post_init__(self):
        arcs = frozenset((int(i), int(j)) for i, j in self.arcs)
        for i, j in arcs:
            if not (0 <= i < self.n and 0 <= j < self.n) or i == j:
                raise InputError(f"bad arc {i}->{j} for n={self.n}")
            if (j, i) in arcs:
                raise InputError(f"pair {{{i},{j}}} oriented both ways")
        if len(arcs) != self.n * (self.n - 1) // 2:
            raise InputError("tournament must orient every pair exactly once")
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Tournament":
        arcs = []
        for k, (i, j) in enumerate(combinations(range(n), 2)):
            arcs.append((j, i) if mask >> k & 1 else (i, j))
        return cls(n, frozenset(arcs))

    @cached_property
    def mask(self) -> int:
        idx = pair_index(self.n)
        return sum(1 << idx[(j, i)] for i, j in self.arcs if i > j)

    @cached_property
    def out_masks(self) -> tuple:
        out = [0] * self.n
        for i, j in self.arcs:
            out[i] |= 1 << j
        return tuple(out)

    @cached_property
    def in_masks(self) -> tuple:
        inn = [0] * self.n
        for i, j in self.arcs:
            inn[j] |= 1 << i
        return tuple(inn)

    def beats(self, i: int, j: int) -> bool:
        return (i, j) in self.arcs

    def sorted_arcs(self) -> list:
        """Arcs ordered by their unordered pair, as in the text format."""
        return sorted(self.arcs, key=lambda a: (min(a), max(a)))


def make_linear(n: int) -> Tournament:
    if n < 1:
        raise InputError("order must be at least 1")
    return Tournament(n, frozenset(combinations(range(n), 2)))


def _reversed_family(n: int, flip) -> Tournament:
    if n < 3 or n % 2 == 0:
        raise InputError(f"family order must be odd and >= 3, got {n}")
    arcs = [(j, i) if flip(i, j, n) else (i, j) for i, j in combinations(range(n), 2)]
    return Tournament(n, frozenset(arcs))


def make_T(n: int) -> Tournament:
    return _reversed_family(n, lambda i, j, n: (i - j) % 2 == 1)


def make_U(n: int) -> Tournament:
    return _reversed_family(n, lambda i, j, n: i % 2 == 0 and j % 2 == 0)


def make_W(n: int) -> Tournament:
    return _reversed_family(n, lambda i, j, n: j == n - 1 and i % 2 == 0)


FAMILIES = {"L": make_linear, "T": make_T, "U": make_U, "W": make_W}


def dual(t: Tournament) -> Tournament:
    return Tournament(t.n, frozenset((j, i) for i, j in t.arcs))


def c3_structure(t: Tournament) -> Hypergraph:
    out = t.out_masks
    edges = []
    for a, b, c in combinations(range(t.n), 3):
        ab = out[a] >> b & 1
        bc = out[b] >> c & 1
        ca = out[c] >> a & 1
        if ab == bc == ca:
            edges.append((a, b, c))
    return Hypergraph(t.n, frozenset(edges))


def is_module_tournament(t: Tournament, m) -> bool:
    mask = to_mask(m)
    if mask >> t.n:
        raise InputError("module candidate has vertices outside the tournament")
    for v in range(t.n):
        if mask >> v & 1:
            continue
        if t.in_masks[v] & mask and t.out_masks[v] & mask:
            return False
    return True


def _tournament_closure(t: Tournament, seed: int, within: int) -> int:
    m = seed
    changed = True
    while changed:
        changed = False
        for v in bits(within & ~m):
            if t.in_masks[v] & m and t.out_masks[v] & m:
                m |= 1 << v
                changed = True
    return m


def is_prime_tournament_mask(t: Tournament, within: int) -> bool:
    verts = list(bits(within))
    if len(verts) < 3:
        return False
    return all(
        _tournament_closure(t, (1 << a) | (1 << b), within) == within
        for a, b in combinations(verts, 2)
    )


def is_prime_tournament(t: Tournament) -> bool:
    return is_prime_tournament_mask(t, (1 << t.n) - 1)


def is_critical_tournament(t: Tournament) -> bool:
    full = (1 << t.n) - 1
    if not is_prime_tournament_mask(t, full):
        return False
    return not any(is_prime_tournament_mask(t, full & ~(1 << v)) for v in range(t.n))


def tournament_primality_graph(t: Tournament) -> frozenset:
    """Pairs ``(v, w)`` with ``t - {v, w}`` prime."""
    full = (1 << t.n) - 1
    return frozenset(
        (v, w) for v, w in combinations(range(t.n), 2)
        if is_prime_tournament_mask(t, full & ~(1 << v) & ~(1 << w))
    )


def iter_realizations(h: Hypergraph, limit: int | None = None):
    """Yield every tournament realizing ``h``, in increasing mask order."""
    limit = bounds().max_realize_n if limit is None else limit
    if not h.is_3uniform():
        raise InputError("only 3-hypergraphs can be realized")
    if h.n > limit:
        raise CapacityError(f"realization search over 2**{h.n * (h.n - 1) // 2} tournaments exceeds n <= {limit}")
    triples = list(combinations(range(h.n), 3))
    idx = pair_index(h.n)
    # a<b<c is cyclic iff bits (ab, bc, ac) are (0, 0, 1) or (1, 1, 0)
    checks = [(idx[(a, b)], idx[(b, c)], idx[(a, c)], (a, b, c) in h.edges) for a, b, c in triples]
    for mask in range(1 << (h.n * (h.n - 1) // 2)):
        ok = True
        for pab, pbc, pac, want in checks:
            ab = mask >> pab & 1
            bc = mask >> pbc & 1
            ac = mask >> pac & 1
            cyclic = ab == bc and ac != ab
            if cyclic != want:
                ok = False
                break
        if ok:
            yield Tournament.from_mask(h.n, mask)


def realize(h: Hypergraph, limit: int | None = None):
    """First realization of ``h`` in mask order, or ``None``."""
    return next(iter_realizations(h, limit), None)


def verify_same_primality(h: Hypergraph, all_realizations: bool = False) -> dict:
    """Compare primality of ``h`` with that of its realizations."""
    hp = is_prime(h)
    reals = list(iter_realizations(h)) if all_realizations else [realize(h)]
    reals = [t for t in reals if t is not None]
    if not reals:
        raise InputError("hypergraph has no realization")
    mismatches = [t.mask for t in reals if is_prime_tournament(t) != hp]
    return {"prime": hp, "checked": len(reals), "mismatches": mismatches, "ok": not mismatches}
