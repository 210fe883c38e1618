"""Orderly generation, sampling, and counterexample search."""

import pytest

from reedcheck.enumeration import (
    KNOWN_COUNTS,
    SearchResult,
    counterexample_search,
    enumerate_graphs,
    sample_gnp,
)
from reedcheck.graph import (
    GraphError,
    canonical_form,
    complete_graph,
    empty_graph,
    to_graph6,
)
from reedcheck.patterns import ClassSpec, class_registry, is_in_class

from oracles import labeled_orbit_count


class TestEnumerate:
    def test_counts_up_to_7(self):
        for n in range(1, 8):
            assert sum(1 for _ in enumerate_graphs(n)) == KNOWN_COUNTS[n - 1]

    def test_counts_match_labeled_dedup_oracle(self):
        # independent recount by orbit minima of labeled graphs
        for n in range(1, 6):
            assert labeled_orbit_count(n) == KNOWN_COUNTS[n - 1]

    def test_single_vertex(self):
        assert list(enumerate_graphs(1)) == [empty_graph(1)]

    def test_count_order_9(self):
        # the full sequence 1, 2, 4, 11, 34, 156, 1044, 12346, 274668
        assert sum(1 for _ in enumerate_graphs(9)) == KNOWN_COUNTS[8]

    def test_streamed_graphs_are_canonical_representatives(self):
        for n in range(1, 7):
            for g in enumerate_graphs(n):
                assert canonical_form(g) == to_graph6(g)

    def test_deterministic_sorted_order(self):
        first = [to_graph6(g) for g in enumerate_graphs(6)]
        second = [to_graph6(g) for g in enumerate_graphs(6)]
        assert first == second == sorted(first)
        assert len(set(first)) == len(first)

    def test_pruned_equals_filtered(self):
        # pruning must commute with membership filtering
        for c in class_registry():
            for n in range(1, 8):
                pruned = {to_graph6(g) for g in enumerate_graphs(n, prune=c)}
                filtered = {
                    to_graph6(g) for g in enumerate_graphs(n) if is_in_class(g, c)
                }
                assert pruned == filtered

    def test_order_range_enforced(self):
        with pytest.raises(GraphError, match="order"):
            list(enumerate_graphs(10))
        with pytest.raises(GraphError):
            list(enumerate_graphs(0))


class TestSampleGnp:
    def test_p_zero_edgeless(self):
        assert sample_gnp(5, 0.0, 123).edge_count() == 0

    def test_p_one_complete(self):
        assert sample_gnp(5, 1.0, 123) == complete_graph(5)

    def test_determinism(self):
        a = sample_gnp(12, 0.5, 987654321)
        b = sample_gnp(12, 0.5, 987654321)
        assert a == b

    def test_different_seeds_differ(self):
        assert sample_gnp(12, 0.5, 1) != sample_gnp(12, 0.5, 2)

    def test_probability_validated(self):
        with pytest.raises(ValueError):
            sample_gnp(5, 1.5, 0)

    def test_order_validated(self):
        with pytest.raises(GraphError):
            sample_gnp(65, 0.5, 0)


class TestCounterexampleSearch:
    def test_unrestricted_class_order_5(self):
        everything = ClassSpec("all-graphs", ())
        res = counterexample_search(everything, 5)
        assert res.counterexample is None
        assert res.budget_failure is None
        # all isomorphism classes of order 1..5
        assert res.graphs_checked == sum(KNOWN_COUNTS[:5]) == 52
        assert res.checked_per_order == (1, 2, 4, 11, 34)

    def test_each_class_small(self):
        for c in class_registry():
            res = counterexample_search(c, 6)
            assert res.counterexample is None
            assert res.class_name == c.name

    def test_budget_failure_recorded(self):
        everything = ClassSpec("all-graphs", ())
        res = counterexample_search(everything, 4, budget=2)
        assert res.budget_failure is not None
        assert res.counterexample is None

    def test_json_round_trip(self):
        res = counterexample_search(class_registry()[0], 4)
        data = res.to_json()
        assert data["class"] == "class1"
        assert data["counterexample"] is None
        assert data["graphs_checked"] == res.graphs_checked

    def test_range_enforced(self):
        with pytest.raises(GraphError):
            counterexample_search(class_registry()[0], 10)


def test_search_result_is_plain_data():
    res = SearchResult(class_name="x", n_max=3, graphs_checked=7)
    assert res.to_json()["budget_failure"] is None
