"""Exhaustive enumeration of small 3-hypergraphs, tournaments and construction inputs.

Hypergraph encoding: the triples of ``{0..n-1}`` in lexicographic order give
the bit positions, so an ``n``-vertex 3-hypergraph is an integer below
``2**C(n,3)``. Tournaments use the pair encoding of :mod:`.tournaments`.

Primality over a whole encoding range is computed with numpy by testing
every candidate module at once against all bitmasks; this route is
independent of the closure test in :mod:`.hypergraph`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .construction import ConstructionInput, build, decompose, validate
from .criteria import predict_and_crosscheck
from .errors import CapacityError, CounterexampleError, InputError
from .graphs import (classify_components, disjoint_paths, find_isomorphism,
                     primality_graph, verify_degree_lemma)
from .hypergraph import (Hypergraph, check_two_vertex_removal, extension_partition, is_critical,
                         is_prime, is_prime_mask, to_mask)
from .tournaments import (FAMILIES, Tournament, c3_structure, dual, is_critical_tournament,
                          make_T, pair_index, tournament_primality_graph)

log = logging.getLogger(__name__)

MAX_HYPERGRAPH_N = 6
MAX_TOURNAMENT_N = 7
MAX_INPUT_VERTICES = 9
MAX_INPUT_COMPONENTS = 4

KINDS = ("all-3-hypergraphs", "all-tournaments", "all-construction-inputs")
FILTERS = ("prime", "critical", "realizable")


@lru_cache(maxsize=None)
def triple_index(n: int) -> dict:
    return {t: k for k, t in enumerate(combinations(range(n), 3))}


def hypergraph_from_mask(n: int, mask: int) -> Hypergraph:
    return Hypergraph(n, frozenset(t for t, k in triple_index(n).items() if mask >> k & 1))


def hypergraph_mask(h: Hypergraph) -> int:
    if not h.is_3uniform():
        raise InputError("only 3-hypergraphs have a triple bitmask")
    idx = triple_index(h.n)
    return sum(1 << idx[e] for e in h.edges)


def _all_masks(nbits: int) -> np.ndarray:
    return np.arange(1 << nbits, dtype=np.uint32)


def _bitsum(items, idx) -> int:
    return sum(1 << idx[t] for t in items)


@lru_cache(maxsize=None)
def hypergraph_prime_table(n: int) -> np.ndarray:
    """``table[mask]`` is the primality of the 3-hypergraph encoded by ``mask``."""
    if n > MAX_HYPERGRAPH_N:
        raise CapacityError(f"3-hypergraph tables are limited to n <= {MAX_HYPERGRAPH_N}")
    idx = triple_index(n)
    masks = _all_masks(len(idx))
    if n < 3:
        return np.zeros(len(masks), dtype=bool)
    decomposable = np.zeros(len(masks), dtype=bool)
    verts = range(n)
    for size in range(2, n):
        for m in combinations(verts, size):
            ms = set(m)
            out = [v for v in verts if v not in ms]
            # triples with two vertices in M and one outside can never cross a module
            bad = _bitsum((t for t in idx if len(ms & set(t)) == 2), idx)
            ok = (masks & np.uint32(bad)) == 0
            for u, w in combinations(out, 2):
                grp = np.uint32(_bitsum((tuple(sorted((u, w, x))) for x in m), idx))
                g = masks & grp
                ok &= (g == 0) | (g == grp)
            decomposable |= ok
    return ~decomposable


def _restrict_masks(masks: np.ndarray, n: int, keep: tuple, index_of) -> np.ndarray:
    """Re-encode each mask on the sub-structure induced by ``keep`` (relabelled)."""
    sub = np.zeros_like(masks)
    k = len(keep)
    for dst, small in enumerate(index_of(k)):
        src = index_of(n)[tuple(keep[i] for i in small)]
        sub |= ((masks >> np.uint32(src)) & np.uint32(1)) << np.uint32(dst)
    return sub


@lru_cache(maxsize=None)
def hypergraph_critical_table(n: int) -> np.ndarray:
    prime = hypergraph_prime_table(n)
    if n < 4:
        # deleting a vertex leaves fewer than 3 vertices, never prime
        return prime.copy()
    masks = _all_masks(len(triple_index(n)))
    sub_prime = hypergraph_prime_table(n - 1)
    crit = prime.copy()
    for v in range(n):
        keep = tuple(x for x in range(n) if x != v)
        crit &= ~sub_prime[_restrict_masks(masks, n, keep, triple_index)]
    return crit


@lru_cache(maxsize=None)
def realizable_table(n: int) -> np.ndarray:
    """Which 3-hypergraph masks are C3-structures of some tournament."""
    tmasks = _all_masks(n * (n - 1) // 2)
    tidx = pair_index(n)
    c3 = np.zeros_like(tmasks)
    for (a, b, c), k in triple_index(n).items():
        ab = (tmasks >> np.uint32(tidx[(a, b)])) & np.uint32(1)
        bc = (tmasks >> np.uint32(tidx[(b, c)])) & np.uint32(1)
        ac = (tmasks >> np.uint32(tidx[(a, c)])) & np.uint32(1)
        cyc = (ab == bc) & (ac != ab)
        c3 |= cyc.astype(np.uint32) << np.uint32(k)
    table = np.zeros(1 << len(triple_index(n)), dtype=bool)
    table[c3] = True
    return table


@lru_cache(maxsize=None)
def tournament_prime_table(n: int) -> np.ndarray:
    if n > MAX_TOURNAMENT_N:
        raise CapacityError(f"tournament tables are limited to n <= {MAX_TOURNAMENT_N}")
    idx = pair_index(n)
    masks = _all_masks(len(idx))
    if n < 3:
        return np.zeros(len(masks), dtype=bool)
    decomposable = np.zeros(len(masks), dtype=bool)
    for size in range(2, n):
        for m in combinations(range(n), size):
            ok = np.ones(len(masks), dtype=bool)
            for v in (x for x in range(n) if x not in m):
                pairs = [tuple(sorted((v, x))) for x in m]
                grp = np.uint32(_bitsum(pairs, idx))
                # bit set means the larger endpoint beats the smaller; v beats all of M
                v_wins = np.uint32(_bitsum([p for p in pairs if p[1] == v], idx))
                g = masks & grp
                ok &= (g == v_wins) | (g == (grp ^ v_wins))
            decomposable |= ok
    return ~decomposable


@lru_cache(maxsize=None)
def tournament_critical_table(n: int) -> np.ndarray:
    prime = tournament_prime_table(n)
    if n < 4:
        return prime
    masks = _all_masks(len(pair_index(n)))
    sub_prime = tournament_prime_table(n - 1)
    crit = prime.copy()
    for v in range(n):
        keep = tuple(x for x in range(n) if x != v)
        crit &= ~sub_prime[_restrict_masks(masks, n, keep, pair_index)]
    return crit


def canonical_hypergraph_mask(n: int, mask: int) -> int:
    """Smallest mask over all relabellings."""
    idx = triple_index(n)
    triples = [t for t, k in idx.items() if mask >> k & 1]
    best = None
    for p in permutations(range(n)):
        m = sum(1 << idx[tuple(sorted(p[x] for x in t))] for t in triples)
        if best is None or m < best:
            best = m
    return best


def canonical_tournament_mask(n: int, mask: int) -> int:
    t = Tournament.from_mask(n, mask)
    idx = pair_index(n)
    best = None
    for p in permutations(range(n)):
        m = sum(1 << idx[(p[j], p[i])] for i, j in t.arcs if p[i] > p[j])
        if best is None or m < best:
            best = m
    return best


def compositions(total: int, parts: int):
    for cuts in combinations(range(1, total), parts - 1):
        b = (0,) + cuts + (total,)
        yield tuple(b[i + 1] - b[i] for i in range(parts))


def iter_construction_inputs(min_vertices: int = 5, max_vertices: int = MAX_INPUT_VERTICES,
                             max_components: int = MAX_INPUT_COMPONENTS):
    """Every valid input whose paths sit on consecutive vertex ranges.

    Component sizes run over all ordered compositions, so every input is
    covered up to relabelling of ``gamma``.
    """
    if max_vertices > MAX_INPUT_VERTICES or max_components > MAX_INPUT_COMPONENTS:
        raise CapacityError("construction inputs are limited to 9 vertices and 4 components")
    for total in range(min_vertices, max_vertices + 1):
        for k in range(1, max_components + 1):
            for sizes in compositions(total, k):
                gamma = disjoint_paths(sizes)
                allowed = [e for e in combinations(range(k), 2) if sizes[e[0]] % 2 != sizes[e[1]] % 2]
                allowed += [e for e in combinations(range(k), 3) if all(sizes[i] % 2 for i in e)]
                for m in range(1 << len(allowed)):
                    sh = Hypergraph(k, frozenset(allowed[i] for i in range(len(allowed)) if m >> i & 1))
                    inp = ConstructionInput(gamma, sh)
                    if not validate(inp):
                        yield inp


@dataclass
class EnumerationTask:
    kind: str
    n: int = 5
    filters: tuple = ()
    dedup: bool = False
    max_components: int = MAX_INPUT_COMPONENTS

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        for f in self.filters:
            if f not in FILTERS:
                raise InputError(f"unknown filter {f!r}")
        if self.kind == "all-3-hypergraphs" and self.n > MAX_HYPERGRAPH_N:
            raise CapacityError(f"3-hypergraph enumeration is limited to n <= {MAX_HYPERGRAPH_N}")
        if self.kind == "all-tournaments" and self.n > MAX_TOURNAMENT_N:
            raise CapacityError(f"tournament enumeration is limited to n <= {MAX_TOURNAMENT_N}")
        if self.kind == "all-construction-inputs" and self.n > MAX_INPUT_VERTICES:
            raise CapacityError(f"construction inputs are limited to {MAX_INPUT_VERTICES} vertices")

    def describe(self) -> dict:
        return {"kind": self.kind, "n": self.n, "filters": list(self.filters), "dedup": self.dedup}


@dataclass
class Enumeration:
    task: EnumerationTask
    objects: list
    counts: dict = field(default_factory=dict)

    def summary(self) -> dict:
        return {"task": self.task.describe(), "total": self.counts.get("total", 0), **self.counts}


def _mask_selection(task: EnumerationTask):
    if task.kind == "all-3-hypergraphs":
        prime = hypergraph_prime_table(task.n)
        tables = {"prime": prime, "critical": hypergraph_critical_table(task.n),
                  "realizable": realizable_table(task.n)}
    else:
        prime = tournament_prime_table(task.n)
        tables = {"prime": prime, "critical": tournament_critical_table(task.n)}
    keep = np.ones(len(prime), dtype=bool)
    for f in task.filters:
        if f not in tables:
            raise InputError(f"filter {f!r} does not apply to {task.kind}")
        keep &= tables[f]
    counts = {"total": int(len(prime))}
    counts.update({name: int(t.sum()) for name, t in tables.items()})
    counts["selected"] = int(keep.sum())
    return np.nonzero(keep)[0], counts


def enumerate_objects(task: EnumerationTask) -> Enumeration:
    """Objects of the task in increasing bitmask order, plus summary counts."""
    if task.kind == "all-construction-inputs":
        objs, counts = [], {"total": 0, "prime": 0, "critical": 0}
        for inp in iter_construction_inputs(5, task.n, task.max_components):
            counts["total"] += 1
            h = build(inp)
            prime = is_prime(h)
            critical = prime and is_critical(h)
            counts["prime"] += prime
            counts["critical"] += critical
            if "prime" in task.filters and not prime or "critical" in task.filters and not critical:
                continue
            objs.append(inp)
        counts["selected"] = len(objs)
        return Enumeration(task, objs, counts)
    selected, counts = _mask_selection(task)
    masks = [int(m) for m in selected]
    if task.dedup:
        canon = canonical_hypergraph_mask if task.kind == "all-3-hypergraphs" else canonical_tournament_mask
        reps, seen = [], set()
        for m in masks:
            c = canon(task.n, m)
            if c not in seen:
                seen.add(c)
                reps.append(m)
        masks = reps
        counts["classes"] = len(reps)
    if task.kind == "all-3-hypergraphs" and task.n >= 5:
        counts.update(critical_shape_counts(task.n))
    make = hypergraph_from_mask if task.kind == "all-3-hypergraphs" else Tournament.from_mask
    return Enumeration(task, [make(task.n, m) for m in masks], counts)


def critical_shape_counts(n: int) -> dict:
    """How many critical hypergraphs are circular, and how many decompose exactly."""
    out = {"circular": 0, "decomposed_ok": 0}
    for mask in np.nonzero(hypergraph_critical_table(n))[0]:
        h = hypergraph_from_mask(n, int(mask))
        if any(c.kind == "cycle" for c in classify_components(primality_graph(h, check=False))):
            out["circular"] += 1
            continue
        try:
            decompose(h, check=False)
            out["decomposed_ok"] += 1
        except (CounterexampleError, InputError):
            pass
    return out


# --- verification suites -------------------------------------------------


@dataclass
class SuiteReport:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, msg):
        log.error("%s: %s", self.name, msg)
        self.failures.append(msg)

    def to_json(self) -> dict:
        return {"task": self.name, "total": self.counts.get("total", self.checked),
                "checked": self.checked, **self.counts,
                "failures": self.failures, "notes": self.notes, "ok": self.ok}

    def raise_if_failed(self):
        if self.failures:
            raise CounterexampleError(f"{self.name}: {len(self.failures)} failure(s): {self.failures[:3]}")


def expected_family_pgraph(family: str, n: int) -> frozenset:
    path = frozenset((k, k + 1) for k in range(n - 1))
    if family == "T":
        return path | {(0, n - 1)}
    if family == "U":
        return path
    if family == "W":
        return frozenset((k, k + 1) for k in range(n - 2))
    raise InputError(f"no primality-graph shape for family {family!r}")


def verify_families(orders=(5, 7, 9)) -> SuiteReport:
    """Criticality and primality-graph shape of the C3-structures of T, U, W."""
    rep = SuiteReport("families")
    for n in orders:
        for fam in "TUW":
            t = FAMILIES[fam](n)
            h = c3_structure(t)
            rep.checked += 1
            if not is_critical(h):
                rep.fail(f"C3({fam}{n}) is not critical")
                continue
            if not is_critical_tournament(t):
                rep.fail(f"{fam}{n} is not a critical tournament")
            got = primality_graph(h).edges
            if got != expected_family_pgraph(fam, n):
                rep.fail(f"P(C3({fam}{n})) = {sorted(got)}")
            if tournament_primality_graph(t) != got:
                rep.fail(f"P({fam}{n}) differs from P(C3({fam}{n}))")
    return rep


def _t_structure(n):
    return c3_structure(make_T(n))


def verify_theorem1(n: int) -> SuiteReport:
    """Each critical 3-hypergraph on ``n`` vertices is circular or decomposes exactly.

    Also checks that circularity coincides with a cycle in the primality graph,
    and the degree bound with its neighbourhood modules.
    """
    if n not in (5, 6):
        raise InputError("theorem1 sweep is defined for n in {5, 6}")
    rep = SuiteReport(f"theorem1 n={n}")
    prime = hypergraph_prime_table(n)
    crit = hypergraph_critical_table(n)
    rep.counts.update(total=int(len(prime)), prime=int(prime.sum()), critical=int(crit.sum()),
                      circular=0, decomposed_ok=0, degree_lemma_ok=0)
    tn = _t_structure(n) if n % 2 else None
    for mask in np.nonzero(crit)[0]:
        h = hypergraph_from_mask(n, int(mask))
        rep.checked += 1
        g = primality_graph(h, check=False)
        problems = verify_degree_lemma(h, g)
        if problems:
            rep.fail(f"mask {int(mask)}: {problems}")
        else:
            rep.counts["degree_lemma_ok"] += 1
        cyc = any(c.kind == "cycle" for c in classify_components(g))
        iso = tn is not None and find_isomorphism(h, tn) is not None
        if cyc != iso:
            rep.fail(f"mask {int(mask)}: cycle component {cyc} but circular {iso}")
            continue
        if iso:
            rep.counts["circular"] += 1
            continue
        try:
            decompose(h, check=False)
            rep.counts["decomposed_ok"] += 1
        except (CounterexampleError, InputError) as exc:
            rep.fail(f"mask {int(mask)}: {exc}")
    return rep


def verify_realizable_critical(n: int = 5) -> SuiteReport:
    """Realizable critical 3-hypergraphs are exactly the copies of C3(T), C3(U), C3(W)."""
    rep = SuiteReport(f"realizable-critical n={n}")
    targets = [c3_structure(FAMILIES[f](n)) for f in "TUW"] if n % 2 and n >= 5 else []
    both = hypergraph_critical_table(n) & realizable_table(n)
    for mask in range(len(both)):
        if not realizable_table(n)[mask]:
            continue
        h = hypergraph_from_mask(n, mask)
        rep.checked += 1
        in_family = any(find_isomorphism(h, t) is not None for t in targets)
        if bool(both[mask]) != in_family:
            rep.fail(f"mask {mask}: critical={bool(both[mask])} family={in_family}")
    rep.counts["realizable"] = rep.checked
    rep.counts["critical_realizable"] = int(both.sum())
    return rep


def verify_theorem3_removal(n: int, with_subsets: bool = True) -> SuiteReport:
    """Every prime ``h`` has a prime two-vertex deletion, inside ``(V - X) + X_`` for prime ``X``."""
    if n < 4 or n > MAX_HYPERGRAPH_N:
        raise InputError(f"removal sweep needs 4 <= n <= {MAX_HYPERGRAPH_N}")
    rep = SuiteReport(f"theorem3 n={n}")
    prime = hypergraph_prime_table(n)
    rep.counts.update(prime=int(prime.sum()), pairs_checked=0)
    for mask in np.nonzero(prime)[0]:
        h = hypergraph_from_mask(n, int(mask))
        rep.checked += 1
        try:
            check_two_vertex_removal(h)
        except CounterexampleError as exc:
            rep.fail(f"mask {int(mask)}: {exc}")
            continue
        if not with_subsets:
            continue
        for size in range(3, n):
            for x in combinations(range(n), size):
                if not is_prime_mask(h, to_mask(x)):
                    continue
                part = extension_partition(h, x)
                if not part.is_disjoint():
                    rep.fail(f"mask {int(mask)}, X={x}: classes overlap")
                pool = (set(range(n)) - set(x)) | part.underline_x
                rep.counts["pairs_checked"] += 1
                try:
                    check_two_vertex_removal(h, pool)
                except CounterexampleError as exc:
                    rep.fail(f"mask {int(mask)}, X={x}: {exc}")
    return rep


def verify_theorem2(max_vertices: int = MAX_INPUT_VERTICES,
                    max_components: int = MAX_INPUT_COMPONENTS) -> SuiteReport:
    """Predicted primality/criticality/primality-graph equal brute force on every valid input."""
    rep = SuiteReport(f"theorem2 n<={max_vertices}")
    rep.counts.update(prime=0, critical=0, pgraph_equals_gamma=0)
    for inp in iter_construction_inputs(5, max_vertices, max_components):
        rep.checked += 1
        r = predict_and_crosscheck(inp, crosscheck=True)
        truth = r.crosscheck["truth"]
        for key in ("prime", "critical", "pgraph_equals_gamma"):
            rep.counts[key] += truth[key]
        if not r.crosscheck["agrees"]:
            sizes = [c.size for c in inp.comps]
            rep.fail(f"paths {sizes}, script_h edges {inp.script_h.sorted_edges()}: "
                     f"predicted {r.to_json()['predicted']} vs truth {truth}")
    return rep


def verify_schmerl_trotter(n: int = 5) -> SuiteReport:
    """Critical tournaments on ``n`` vertices, up to isomorphism, against T, U, W and duals."""
    rep = SuiteReport(f"schmerl-trotter n={n}")
    crit = tournament_critical_table(n)
    prime = tournament_prime_table(n)
    classes = {canonical_tournament_mask(n, int(m)) for m in np.nonzero(crit)[0]}
    expected = set()
    if n % 2 and n >= 5:
        for f in "TUW":
            t = FAMILIES[f](n)
            expected.add(canonical_tournament_mask(n, t.mask))
            expected.add(canonical_tournament_mask(n, dual(t).mask))
    rep.checked = int(len(crit))
    rep.counts.update(prime=int(prime.sum()), critical=int(crit.sum()), classes=len(classes),
                      expected_classes=len(expected))
    if classes != expected:
        rep.fail(f"critical classes {sorted(classes)} != family classes {sorted(expected)}")
    if n % 2 and n >= 5:
        plain = {canonical_tournament_mask(n, FAMILIES[f](n).mask) for f in "TUW"}
        if classes != plain:
            rep.fail("some critical tournament is not isomorphic to T, U or W itself")
    # primality of a tournament equals primality of its C3-structure
    real = realizable_table(n)
    hprime = hypergraph_prime_table(n)
    for m in range(len(prime)):
        t = Tournament.from_mask(n, m)
        hm = hypergraph_mask(c3_structure(t))
        if not real[hm] or bool(hprime[hm]) != bool(prime[m]):
            rep.fail(f"tournament mask {m}: prime {bool(prime[m])} vs C3-structure {bool(hprime[hm])}")
    return rep
