"""Decision procedures for primality and criticality of Γ•ℍ read off ℍ.

Components are referred to by index. "Nontrivial" modules of ℍ exclude the
empty set, singletons and the whole vertex set; a hypergraph on at most one
vertex has none.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import combinations

from .config import bounds
from .construction import ConstructionInput, build, validate
from .errors import CapacityError, CounterexampleError, InputError
from .graphs import primality_graph
from .hypergraph import Hypergraph, induced, is_critical, is_module, is_prime


def is_module_of_script_h(script_h: Hypergraph, w_set) -> bool:
    """Module of both the pair part and the triple part of ``script_h``."""
    w = list(w_set)
    pairs = Hypergraph(script_h.n, frozenset(e for e in script_h.edges if len(e) == 2))
    triples = Hypergraph(script_h.n, frozenset(e for e in script_h.edges if len(e) == 3))
    return is_module(pairs, w) and is_module(triples, w)


def script_h_modules(script_h: Hypergraph, within=None) -> list:
    """Nontrivial modules of ``script_h``, optionally only those inside ``within``."""
    limit = bounds().max_script_h_n
    if script_h.n > limit:
        raise CapacityError(f"module enumeration on {script_h.n} components exceeds bound {limit}")
    pool = sorted(range(script_h.n) if within is None else within)
    found = []
    for size in range(2, min(len(pool), script_h.n - 1) + 1):
        for m in combinations(pool, size):
            if is_module_of_script_h(script_h, m):
                found.append(m)
    return found


def is_connected(h: Hypergraph) -> bool:
    """Connectivity where each edge links all its vertices."""
    if h.n <= 1:
        return True
    parent = list(range(h.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in h.edges:
        root = find(e[0])
        for v in e[1:]:
            parent[find(v)] = root
    return len({find(v) for v in range(h.n)}) == 1


def _delete(script_h: Hypergraph, drop):
    """``script_h`` minus ``drop``, with a map back to original indices."""
    sub, labels = induced(script_h, [i for i in range(script_h.n) if i not in set(drop)])
    return sub, labels


def _module_inside(sub: Hypergraph, labels, allowed) -> tuple | None:
    """First nontrivial module of ``sub`` whose original indices lie in ``allowed``."""
    local = [i for i, orig in enumerate(labels) if orig in allowed]
    mods = script_h_modules(sub, within=local)
    return tuple(labels[i] for i in mods[0]) if mods else None


@dataclass
class CriterionResult:
    holds: bool
    witness: object = None


@dataclass
class CriteriaReport:
    criteria: dict
    prime_predicted: bool
    critical_predicted: bool
    pgraph_equals_gamma_predicted: bool
    crosscheck: dict = field(default_factory=lambda: {"ran": False, "agrees": None})

    def to_json(self) -> dict:
        out = {name: asdict(res) for name, res in self.criteria.items()}
        out["predicted"] = {
            "prime": self.prime_predicted,
            "critical": self.critical_predicted,
            "pgraph_equals_gamma": self.pgraph_equals_gamma_predicted,
        }
        out["crosscheck"] = self.crosscheck
        return out


def check_C1_C2(inp: ConstructionInput) -> dict:
    sh = inp.script_h
    singles = inp.singleton_components()
    if is_connected(sh):
        c1 = CriterionResult(True)
    else:
        c1 = CriterionResult(False, "script_h is disconnected")
    bad = _module_inside(sh, tuple(range(sh.n)), singles)
    c2 = CriterionResult(bad is None, None if bad is None else list(bad))
    return {"C1": c1, "C2": c2}


def check_C3(inp: ConstructionInput) -> CriterionResult:
    sh, singles = inp.script_h, inp.singleton_components()
    for v in sorted(singles):
        sub, labels = _delete(sh, [v])
        if not is_connected(sub):
            continue
        if _module_inside(sub, labels, singles - {v}) is None:
            return CriterionResult(False, {"component": v})
    return CriterionResult(True)


def check_C4(inp: ConstructionInput) -> CriterionResult:
    sh, singles = inp.script_h, inp.singleton_components()
    for c in range(sh.n):
        if inp.comps[c].size != 2:
            continue
        sub, labels = _delete(sh, [c])
        if not is_connected(sub):
            return CriterionResult(False, {"component": c, "reason": "script_h - C disconnected"})
        bad = _module_inside(sub, labels, singles)
        if bad is not None:
            return CriterionResult(False, {"component": c, "module": list(bad)})
    return CriterionResult(True)


def check_C5(inp: ConstructionInput) -> CriterionResult:
    sh, singles = inp.script_h, inp.singleton_components()
    for c in range(sh.n):
        if inp.comps[c].size != 3:
            continue
        # shrinking C to one vertex keeps the incidences of script_h
        if not is_connected(sh):
            return CriterionResult(False, {"component": c, "reason": "script_h_C disconnected"})
        bad = _module_inside(sh, tuple(range(sh.n)), singles | {c})
        if bad is not None:
            return CriterionResult(False, {"component": c, "module": list(bad)})
    return CriterionResult(True)


def check_C6(inp: ConstructionInput) -> CriterionResult:
    sh, singles = inp.script_h, inp.singleton_components()
    for c in sorted(singles):
        without_c, lab_c = _delete(sh, [c])
        isolated = {lab_c[i] for i in range(without_c.n) if without_c.degree(i) == 0}
        for d in sorted((singles - {c}) & isolated):
            sub, labels = _delete(sh, [c, d])
            if not is_connected(sub):
                continue
            if _module_inside(sub, labels, singles - {c, d}) is None:
                return CriterionResult(False, {"component": c, "partner": d})
    return CriterionResult(True)


def evaluate_criteria(inp: ConstructionInput) -> dict:
    out = check_C1_C2(inp)
    out["C3"] = check_C3(inp)
    out["C4"] = check_C4(inp)
    out["C5"] = check_C5(inp)
    out["C6"] = check_C6(inp)
    return out


def ground_truth(inp: ConstructionInput) -> dict:
    h = build(inp)
    prime = is_prime(h)
    critical = prime and is_critical(h)
    same = critical and primality_graph(h, check=False) == inp.gamma
    return {"prime": prime, "critical": critical, "pgraph_equals_gamma": same}


def predict_and_crosscheck(inp: ConstructionInput, crosscheck: bool | None = None,
                           strict: bool = False) -> CriteriaReport:
    """Predict primality, criticality and ``P(Γ•ℍ) = Γ`` from ℍ alone.

    With ``crosscheck`` (default: when ``n`` is within the cross-check
    bound) the predictions are compared with brute force; ``strict`` raises
    on disagreement.
    """
    problems = validate(inp)
    if problems:
        raise InputError("invalid construction input: " + "; ".join(problems))
    if inp.n < 5:
        raise InputError(f"criteria apply from 5 vertices on, got {inp.n}")
    res = evaluate_criteria(inp)
    prime = res["C1"].holds and res["C2"].holds
    critical = prime and res["C3"].holds
    same = critical and res["C4"].holds and res["C5"].holds and res["C6"].holds
    report = CriteriaReport(res, prime, critical, same)
    if crosscheck is None:
        crosscheck = inp.n <= bounds().crosscheck_n
    if crosscheck:
        truth = ground_truth(inp)
        predicted = {"prime": prime, "critical": critical, "pgraph_equals_gamma": same}
        agrees = truth == predicted
        report.crosscheck = {"ran": True, "agrees": agrees, "truth": truth}
        if strict and not agrees:
            raise CounterexampleError(f"criteria {predicted} disagree with brute force {truth}", inp)
    return report
