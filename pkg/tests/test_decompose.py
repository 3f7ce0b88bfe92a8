from collections import Counter
from dataclasses import replace

import json

from scdposet import (
    Decomposition,
    GridShape,
    chain_length_histogram,
    check_partition,
    decompose,
    level_sizes,
    verify,
)

from conftest import brute_level_sizes


class TestDecompose:
    def test_3x2_shape(self):
        chains = list(decompose(GridShape(3, 2)))
        assert len(chains) == 7
        assert sum(len(ch) for ch in chains) == 27

    def test_single_row_is_one_full_chain(self):
        chains = list(decompose(GridShape(1, 4)))
        assert len(chains) == 1
        assert [el.parts for el in chains[0].elements] == [(0,), (1,), (2,), (3,), (4,)]

    def test_2x1_exact_chains(self):
        chains = [[el.parts for el in ch.elements] for ch in decompose(GridShape(2, 1))]
        assert chains == [[(0, 0), (0, 1), (1, 1)], [(1, 0)]]

    def test_deterministic(self):
        shape = GridShape(3, 3)
        first = [[el.parts for el in ch.elements] for ch in decompose(shape)]
        second = [[el.parts for el in ch.elements] for ch in decompose(shape)]
        assert first == second

    def test_materialized_container(self):
        dec = Decomposition.build(GridShape(2, 2))
        assert len(dec) == 3
        assert dec.total_elements == 9


class TestLevelSizes:
    def test_3x2_profile(self):
        assert level_sizes(GridShape(3, 2)).sizes == (1, 3, 6, 7, 6, 3, 1)

    def test_single_row_all_ones(self):
        assert level_sizes(GridShape(1, 5)).sizes == (1,) * 6

    def test_2x1_profile(self):
        assert level_sizes(GridShape(2, 1)).sizes == (1, 2, 1)

    def test_matches_brute_count(self, small_shape):
        assert level_sizes(small_shape).sizes == brute_level_sizes(small_shape.m, small_shape.n)

    def test_symmetric_unimodal_and_total(self, small_shape):
        sizes = level_sizes(small_shape).sizes
        top = small_shape.top_rank
        assert sum(sizes) == small_shape.size
        assert all(sizes[k] == sizes[top - k] for k in range(top + 1))
        mid = top // 2
        assert all(sizes[k] <= sizes[k + 1] for k in range(mid))
        assert all(sizes[k] >= sizes[k + 1] for k in range(mid, top))


class TestChainLengthHistogram:
    def test_3x2_histogram(self):
        # brute recount: chains of ranks 0,1,1,2,2,2,3 in a rank-6 poset
        assert chain_length_histogram(GridShape(3, 2)) == {7: 1, 5: 2, 3: 3, 1: 1}

    def test_single_row(self):
        assert chain_length_histogram(GridShape(1, 6)) == {7: 1}

    def test_2x1(self):
        assert chain_length_histogram(GridShape(2, 1)) == {3: 1, 1: 1}

    def test_matches_level_size_differences(self, small_shape):
        assert chain_length_histogram(small_shape) == level_sizes(small_shape).length_counts()

    def test_matches_materialized_chain_lengths(self, small_shape):
        expected = Counter(len(ch) for ch in decompose(small_shape))
        assert chain_length_histogram(small_shape) == dict(expected)


class TestVerify:
    def test_3x2_all_checks_pass(self):
        report = verify(GridShape(3, 2), use_oracle=True)
        assert report.passed
        names = [c.name for c in report.checks]
        assert names == [
            "partition",
            "symmetric",
            "saturated",
            "disjoint",
            "involution",
            "corollary-vs-simulation",
            "middle-rank-count",
        ]
        assert not any(c.skipped for c in report.checks)

    def test_4x6_all_checks_pass(self):
        report = verify(GridShape(4, 6), use_oracle=True)
        assert report.passed

    def test_small_shapes_pass(self, small_shape):
        assert verify(small_shape, use_oracle=True).passed

    def test_report_is_json_serializable(self):
        report = verify(GridShape(2, 3), use_oracle=True)
        payload = json.loads(json.dumps(report.to_dict()))
        assert payload["passed"] is True
        assert len(payload["checks"]) == 7

    def test_mutated_chain_fails_partition(self):
        # harness self-test: move one element between chains and the oracle
        # must name it
        dec = Decomposition.build(GridShape(3, 2))
        stolen = dec.chains[0].elements[1]
        victim = dec.chains[1]
        broken = replace(victim, elements=victim.elements[:-1] + (stolen,))
        chains = list(dec.chains)
        chains[1] = broken
        result = check_partition(dec.shape, chains)
        assert not result.passed
        assert result.counterexample["element"] == list(stolen.parts)

    def test_dropped_element_fails_partition(self):
        dec = Decomposition.build(GridShape(3, 2))
        victim = dec.chains[0]
        broken = replace(victim, elements=victim.elements[:-1])
        chains = list(dec.chains)
        chains[0] = broken
        result = check_partition(dec.shape, chains)
        assert not result.passed
        assert result.counterexample["element"] == list(victim.elements[-1].parts)

    def test_cap_exceeded_skips_oracle_but_runs_rest(self):
        report = verify(GridShape(4, 4), use_oracle=True, cap=100)
        partition = report.check("partition")
        assert partition.skipped
        assert "exceeds cap" in partition.message
        assert report.check("disjoint").passed
        assert "random round trips" in report.check("disjoint").message
        assert report.passed

    def test_oracle_disabled(self):
        report = verify(GridShape(2, 2), use_oracle=False)
        assert report.check("partition").skipped
        assert report.passed

    def test_middle_count_skipped_past_cap(self):
        report = verify(GridShape(6, 6), use_oracle=True, cap=50, sample=16)
        assert report.check("middle-rank-count").skipped
        assert report.passed

    def test_sampled_mode_is_deterministic(self):
        shape = GridShape(4, 5)
        a = verify(shape, use_oracle=True, cap=100, sample=32).to_dict()
        b = verify(shape, use_oracle=True, cap=100, sample=32).to_dict()
        for check in a["checks"] + b["checks"]:
            del check["seconds"]
        assert a == b

    def test_parallel_matches_sequential(self):
        # (5,4) has 381 starts, past the threshold that engages the pool
        shape = GridShape(5, 4)
        seq = verify(shape, use_oracle=True, workers=1).to_dict()
        par = verify(shape, use_oracle=True, workers=2).to_dict()
        for check in seq["checks"] + par["checks"]:
            del check["seconds"]
        assert seq == par
