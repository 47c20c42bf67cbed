import json
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import construction_inputs, mixed_hypergraphs, oracle_is_module, valid_inputs
from crithyper.construction import ConstructionInput, OverlineMap, build, decompose
from crithyper.criteria import (check_C1_C2, check_C3, evaluate_criteria, ground_truth, is_connected,
                                is_module_of_script_h, predict_and_crosscheck, script_h_modules)
from crithyper.errors import CounterexampleError, InputError
from crithyper.graphs import disjoint_paths, primality_graph
from crithyper.hypergraph import Hypergraph, is_module, is_prime
from crithyper.invariants import script_h_module_parity
from crithyper.tournaments import c3_structure, make_U, make_W


def make_input(sizes, edges=()):
    return ConstructionInput(disjoint_paths(sizes), Hypergraph(len(sizes), frozenset(edges)))


def degenerate(inp) -> bool:
    """A lone even path, alone or beside one singleton joined to it by an ℍ-edge."""
    sizes = [c.size for c in inp.comps]
    evens = [s for s in sizes if s % 2 == 0]
    if sizes == evens and len(sizes) == 1:
        return not inp.script_h.edges
    return len(sizes) == 2 and len(evens) == 1 and 1 in sizes and len(inp.script_h.edges) == 1


# --- modules of ℍ ------------------------------------------------------------------


def test_pair_only_module():
    sh = Hypergraph(3, {(0, 2), (1, 2)})
    assert is_module_of_script_h(sh, {0, 1})


def test_triple_meeting_twice():
    assert not is_module_of_script_h(Hypergraph(3, {(0, 1, 2)}), {0, 1})


@settings(max_examples=200)
@given(mixed_hypergraphs(max_n=5), st.data())
def test_script_h_module_is_conjunction(sh, data):
    w = data.draw(st.sets(st.integers(0, max(sh.n - 1, 0)), max_size=sh.n)) if sh.n else set()
    pairs = [e for e in sh.edges if len(e) == 2]
    triples = [e for e in sh.edges if len(e) == 3]
    expected = oracle_is_module(pairs, sh.n, w) and oracle_is_module(triples, sh.n, w)
    assert is_module_of_script_h(sh, w) == expected


def test_script_h_modules_inside():
    sh = Hypergraph(4, {(0, 1, 2), (0, 1, 3)})
    assert script_h_modules(sh) == [(2, 3)]
    assert script_h_modules(sh, within={1, 2}) == []
    assert script_h_modules(Hypergraph(1)) == []


def test_connectivity_conventions():
    assert is_connected(Hypergraph(0)) and is_connected(Hypergraph(1))
    assert not is_connected(Hypergraph(2))
    assert is_connected(Hypergraph(3, {(0, 1, 2)}))


def test_module_parity_in_connected_script_h():
    for inp in valid_inputs(9):
        assert script_h_module_parity(inp) == []


# --- C1 and C2 -------------------------------------------------------------------------


def test_c1_fails_for_two_odd_paths():
    inp = make_input([3, 3])
    res = check_C1_C2(inp)
    assert not res["C1"].holds
    assert not is_prime(build(inp))


def test_c1_c2_hold_for_base_case():
    inp = make_input([2, 1], [(0, 1)])
    res = check_C1_C2(inp)
    assert res["C1"].holds and res["C2"].holds
    assert build(inp) == Hypergraph(3, {(0, 1, 2)}) and is_prime(build(inp))


def test_c2_fails_for_interchangeable_singletons():
    inp = make_input([3, 3, 1, 1], [(0, 1, 2), (0, 1, 3)])
    res = check_C1_C2(inp)
    assert res["C1"].holds
    assert not res["C2"].holds and res["C2"].witness == [2, 3]
    # the module lifts to the singleton vertices
    assert is_module(build(inp), OverlineMap(inp.comps).to_vertices({2, 3}))
    assert not is_prime(build(inp))


# --- C3 to C6 and verdicts --------------------------------------------------------------------


def test_lone_odd_path_vacuous():
    inp = make_input([5])
    report = predict_and_crosscheck(inp)
    assert all(r.holds for r in report.criteria.values())
    assert report.pgraph_equals_gamma_predicted
    assert build(inp) == c3_structure(make_U(5))
    assert report.crosscheck["agrees"]


def test_even_path_and_singleton_fails_c3_literally():
    inp = make_input([4, 1], [(0, 1)])
    assert not check_C3(inp).holds
    assert check_C3(inp).witness == {"component": 1}
    # brute force says the build is critical: a known disagreement
    assert ground_truth(inp)["critical"]


def test_too_small_for_criteria():
    with pytest.raises(InputError):
        predict_and_crosscheck(make_input([2, 1], [(0, 1)]))


def test_invalid_input_refused():
    with pytest.raises(InputError):
        predict_and_crosscheck(make_input([3, 1], [(0, 1)]))


def test_c6_targeted_family():
    # singletons 0 and 1 sit only in the triple, so removing one isolates the other
    failing = predict_and_crosscheck(make_input([1, 1, 2, 3], [(2, 3), (0, 1, 3)]))
    assert failing.criteria["C6"].witness == {"component": 0, "partner": 1}
    truth = failing.crosscheck["truth"]
    assert truth["critical"] and not truth["pgraph_equals_gamma"]
    assert failing.crosscheck["agrees"]
    holding = predict_and_crosscheck(make_input([1, 1, 2, 3], [(0, 2), (0, 1, 3)]))
    assert holding.criteria["C6"].holds and holding.pgraph_equals_gamma_predicted
    assert holding.crosscheck["agrees"]


def test_w7_decomposition_hits_the_degenerate_case():
    inp = decompose(c3_structure(make_W(7)))
    report = predict_and_crosscheck(inp)
    assert report.crosscheck["truth"] == {"prime": True, "critical": True, "pgraph_equals_gamma": True}
    assert not report.criteria["C3"].holds
    assert not report.crosscheck["agrees"]
    with pytest.raises(CounterexampleError):
        predict_and_crosscheck(inp, strict=True)


@settings(max_examples=80, deadline=None)
@given(construction_inputs(max_vertices=8))
def test_report_invariants(inp):
    report = predict_and_crosscheck(inp)
    assert not report.critical_predicted or report.prime_predicted
    assert not report.pgraph_equals_gamma_predicted or report.critical_predicted
    assert report.crosscheck["ran"]
    json.dumps(report.to_json(), default=str)


@settings(max_examples=80, deadline=None)
@given(construction_inputs(max_vertices=8))
def test_criteria_do_not_depend_on_labelling(inp):
    base = evaluate_criteria(inp)
    for other in (inp.with_flips([True] * len(inp.comps)),):
        assert {k: v.holds for k, v in evaluate_criteria(other).items()} == {k: v.holds for k, v in base.items()}


def test_report_json_shape():
    out = predict_and_crosscheck(make_input([5])).to_json()
    assert set(out) == {"C1", "C2", "C3", "C4", "C5", "C6", "predicted", "crosscheck"}
    assert set(out["C1"]) == {"holds", "witness"}
    assert set(out["predicted"]) == {"prime", "critical", "pgraph_equals_gamma"}
    assert out["crosscheck"]["ran"] is True


def test_crosscheck_can_be_skipped():
    report = predict_and_crosscheck(make_input([5]), crosscheck=False)
    assert report.crosscheck == {"ran": False, "agrees": None}


def test_ground_truth_matches_direct_computation():
    inp = make_input([6, 1], [(0, 1)])
    h = build(inp)
    assert ground_truth(inp) == {"prime": True, "critical": True,
                                 "pgraph_equals_gamma": primality_graph(h) == inp.gamma}


# --- exhaustive characterisation --------------------------------------------------------------


def test_disagreements_are_exactly_the_degenerate_family():
    """Predictions match brute force everywhere except a lone even path (with or without one singleton)."""
    disagreements, agreements = [], 0
    for inp in valid_inputs(9):
        report = predict_and_crosscheck(inp, crosscheck=True)
        if report.crosscheck["agrees"]:
            assert not degenerate(inp), [c.size for c in inp.comps]
            agreements += 1
        else:
            disagreements.append(inp)
    assert agreements > 1000
    assert all(degenerate(inp) for inp in disagreements)
    sizes = sorted(tuple(c.size for c in inp.comps) for inp in disagreements)
    assert sizes == sorted([(1, 4), (1, 6), (1, 8), (4, 1), (6, 1), (8, 1), (6,), (8,)])


def test_degenerate_lone_even_path_is_edgeless():
    for size in (6, 8):
        inp = make_input([size])
        report = predict_and_crosscheck(inp)
        assert report.prime_predicted and not report.crosscheck["truth"]["prime"]
        assert build(inp).edges == frozenset()


def test_degenerate_pairs_build_w_structures():
    for size in (4, 6, 8):
        inp = make_input([size, 1], [(0, 1)])
        assert build(inp) == c3_structure(make_W(size + 1))


def test_prime_equivalence_outside_degenerate_family():
    for inp in valid_inputs(8):
        if degenerate(inp):
            continue
        res = check_C1_C2(inp)
        assert (res["C1"].holds and res["C2"].holds) == is_prime(build(inp))


def test_exhaustive_input_count():
    # every valid input at most once, with at most 4 components
    seen = set()
    for inp in valid_inputs(9):
        key = (tuple(c.size for c in inp.comps), inp.script_h.edges)
        assert key not in seen
        seen.add(key)
        assert len(inp.comps) <= 4 and inp.n <= 9
    assert len(seen) == len(valid_inputs(9))


def test_singleton_triples_are_enumerated():
    sizes = {tuple(c.size for c in inp.comps) for inp in valid_inputs(9)}
    assert (3, 3, 1, 1) in sizes
    assert all(sum(s) >= 5 for s in sizes)
    assert any(len(e) == 3 for inp in valid_inputs(9) for e in inp.script_h.edges)
