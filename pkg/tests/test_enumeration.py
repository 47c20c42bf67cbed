import json
import random
from pathlib import Path

import numpy as np
import pytest

from conftest import oracle_is_critical, oracle_is_prime, oracle_isomorphic, oracle_tournament_prime
from crithyper.enumeration import (EnumerationTask, canonical_hypergraph_mask, canonical_tournament_mask,
                                   compositions, enumerate_objects, hypergraph_critical_table,
                                   hypergraph_from_mask, hypergraph_mask, hypergraph_prime_table,
                                   iter_construction_inputs, realizable_table, tournament_critical_table,
                                   tournament_prime_table, triple_index, verify_families,
                                   verify_realizable_critical, verify_schmerl_trotter, verify_theorem1,
                                   verify_theorem2, verify_theorem3_removal)
from crithyper.errors import CapacityError, InputError
from crithyper.hypergraph import is_critical, is_prime
from crithyper.tournaments import Tournament, c3_structure, is_critical_tournament

GOLDEN = Path(__file__).parent / "golden" / "critical_3_hypergraphs_n5.json"


def test_all_hypergraphs_n5():
    res = enumerate_objects(EnumerationTask("all-3-hypergraphs", 5))
    assert len(res.objects) == 1024
    assert res.counts["total"] == 1024


def test_all_tournaments_n3():
    res = enumerate_objects(EnumerationTask("all-tournaments", 3))
    assert len(res.objects) == 8
    assert sum(1 for t in res.objects if c3_structure(t).edges) == 2


def test_critical_filter_matches_golden():
    res = enumerate_objects(EnumerationTask("all-3-hypergraphs", 5, ("critical",)))
    golden = json.loads(GOLDEN.read_text())["critical_masks"]
    assert [hypergraph_mask(h) for h in res.objects] == golden
    assert res.counts["circular"] + res.counts["decomposed_ok"] == len(golden)


def test_determinism():
    task = EnumerationTask("all-tournaments", 5, ("prime",))
    a, b = enumerate_objects(task), enumerate_objects(task)
    assert [t.mask for t in a.objects] == [t.mask for t in b.objects]
    assert a.counts == b.counts
    masks = [t.mask for t in a.objects]
    assert masks == sorted(masks)


@pytest.mark.parametrize("kind,n", [("all-3-hypergraphs", 5), ("all-tournaments", 5)])
def test_dedup_soundness(kind, n):
    full = enumerate_objects(EnumerationTask(kind, n, ("critical",)))
    reps = enumerate_objects(EnumerationTask(kind, n, ("critical",), dedup=True))
    if kind == "all-3-hypergraphs":
        as_h = list(reps.objects)
        canon = canonical_hypergraph_mask
        key = hypergraph_mask
    else:
        as_h = [c3_structure(t) for t in reps.objects]
        canon = canonical_tournament_mask
        key = lambda t: t.mask  # noqa: E731
    # pairwise distinct classes
    if kind == "all-3-hypergraphs":
        for i in range(len(as_h)):
            for j in range(i + 1, len(as_h)):
                assert not oracle_isomorphic(as_h[i], as_h[j])
    # and every object is covered by some representative
    rep_classes = {canon(n, key(o)) for o in reps.objects}
    assert len(rep_classes) == len(reps.objects)
    assert {canon(n, key(o)) for o in full.objects} == rep_classes
    assert reps.counts["classes"] == len(reps.objects)


def test_capacity_bounds():
    with pytest.raises(CapacityError):
        EnumerationTask("all-3-hypergraphs", 7)
    with pytest.raises(CapacityError):
        EnumerationTask("all-tournaments", 8)
    with pytest.raises(CapacityError):
        EnumerationTask("all-construction-inputs", 10)
    with pytest.raises(InputError):
        EnumerationTask("nope", 3)
    with pytest.raises(InputError):
        enumerate_objects(EnumerationTask("all-tournaments", 4, ("realizable",)))


# --- numpy tables against the scalar tests -------------------------------------


@pytest.mark.parametrize("n", [3, 4, 5])
def test_hypergraph_tables_exhaustive(n):
    prime, crit = hypergraph_prime_table(n), hypergraph_critical_table(n)
    for mask in range(len(prime)):
        h = hypergraph_from_mask(n, mask)
        assert prime[mask] == is_prime(h)
        assert crit[mask] == is_critical(h)


def test_hypergraph_tables_sample_n6():
    rnd = random.Random(6)
    prime, crit = hypergraph_prime_table(6), hypergraph_critical_table(6)
    for mask in rnd.sample(range(len(prime)), 400):
        h = hypergraph_from_mask(6, mask)
        assert prime[mask] == is_prime(h)
        assert crit[mask] == is_critical(h)
    for mask in np.nonzero(~prime)[0][:200]:
        assert not is_prime(hypergraph_from_mask(6, int(mask)))


def test_hypergraph_tables_against_oracle_n5():
    prime, crit = hypergraph_prime_table(5), hypergraph_critical_table(5)
    rnd = random.Random(5)
    for mask in rnd.sample(range(1024), 150):
        h = hypergraph_from_mask(5, mask)
        assert prime[mask] == oracle_is_prime(h)
        assert crit[mask] == oracle_is_critical(h)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_tournament_tables(n):
    prime, crit = tournament_prime_table(n), tournament_critical_table(n)
    for mask in range(len(prime)):
        t = Tournament.from_mask(n, mask)
        assert prime[mask] == oracle_tournament_prime(t)
        assert crit[mask] == is_critical_tournament(t)


def test_realizable_table_n4():
    table = realizable_table(4)
    images = {hypergraph_mask(c3_structure(Tournament.from_mask(4, m))) for m in range(64)}
    assert {m for m in range(16) if table[m]} == images


def test_mask_encoding_roundtrip():
    for mask in (0, 1, 513, 1023):
        assert hypergraph_mask(hypergraph_from_mask(5, mask)) == mask
    assert triple_index(4)[(0, 1, 2)] == 0 and triple_index(4)[(1, 2, 3)] == 3


def test_compositions():
    assert list(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert len(list(compositions(9, 4))) == 56


def test_construction_input_enumeration_bounds():
    with pytest.raises(CapacityError):
        list(iter_construction_inputs(5, 10, 4))
    res = enumerate_objects(EnumerationTask("all-construction-inputs", 6, ("critical",)))
    assert res.counts["total"] >= res.counts["prime"] >= res.counts["critical"] == len(res.objects)


# --- suites ------------------------------------------------------------------------


def test_families_suite():
    rep = verify_families()
    assert rep.ok and rep.checked == 9


def test_theorem1_n5():
    rep = verify_theorem1(5)
    assert rep.ok, rep.failures
    c = rep.counts
    assert c["total"] == 1024
    assert c["circular"] + c["decomposed_ok"] == c["critical"] == rep.checked
    assert c["degree_lemma_ok"] == c["critical"]


def test_theorem1_n6():
    rep = verify_theorem1(6)
    assert rep.ok, rep.failures
    assert rep.counts["total"] == 1 << 20
    assert rep.counts["circular"] + rep.counts["decomposed_ok"] == rep.counts["critical"]


def test_theorem1_domain():
    with pytest.raises(InputError):
        verify_theorem1(7)


def test_realizable_critical_suite():
    rep = verify_realizable_critical(5)
    assert rep.ok, rep.failures
    assert rep.counts["realizable"] == int(realizable_table(5).sum())


@pytest.mark.parametrize("n", [4, 5])
def test_theorem3_suite(n):
    rep = verify_theorem3_removal(n)
    assert rep.ok, rep.failures
    assert rep.checked == int(hypergraph_prime_table(n).sum())


def test_schmerl_trotter_suite():
    rep = verify_schmerl_trotter(5)
    assert rep.ok, rep.failures
    assert rep.counts["classes"] == rep.counts["expected_classes"] == 3


def test_suite_json_shape():
    out = verify_theorem1(5).to_json()
    for key in ("task", "total", "prime", "critical", "circular", "decomposed_ok", "failures"):
        assert key in out
    json.dumps(out)


def test_theorem2_suite_reports_known_disagreements():
    rep = verify_theorem2(9)
    assert len(rep.failures) == 8
    assert rep.checked == len(list(iter_construction_inputs(5, 9, 4)))
