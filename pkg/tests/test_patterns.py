"""Pattern catalog, induced-subgraph detection, class membership.

The H and M catalog entries are pinned by two independently transcribed
adjacency-fact lists each (every vertex pair classified as edge or
non-edge).  The tests check that each list determines all 15 pairs,
that the two lists build the identical labeled graph, and that an
explicit relabeling carries it onto the catalog entry.
"""

import random

import pytest

from reedcheck.enumeration import enumerate_graphs, sample_gnp
from reedcheck.graph import (
    build,
    complement,
    complete_graph,
    cycle_graph,
    degree_sequence,
    empty_graph,
    induced_subgraph,
    is_isomorphic,
    path_graph,
    relabel,
)
from reedcheck.patterns import (
    ClassSpec,
    Embedding,
    Pattern,
    catalog,
    class_by_name,
    class_registry,
    contains_induced,
    find_induced,
    is_in_class,
    is_self_complementary,
    pattern_by_name,
)

from oracles import naive_contains_induced


# -- catalog -------------------------------------------------------------------


EXPECTED_ORDERS = {
    "P4": 4, "P4uK1": 5, "2K2": 4, "K2uK2bar": 4,
    "Chair": 5, "Kite": 5, "House": 5, "H": 6, "M": 6,
}


def test_catalog_contents():
    pats = {p.name: p for p in catalog()}
    assert set(EXPECTED_ORDERS) <= set(pats)
    for name, order in EXPECTED_ORDERS.items():
        assert pats[name].graph.n == order


def test_chair_degree_sequence():
    # from the edge list 01, 12, 23, 14: vertex 1 has degree 3, vertex 2
    # degree 2, the rest are leaves
    chair = pattern_by_name("Chair").graph
    assert chair.edge_count() == 4
    assert degree_sequence(chair) == (3, 2, 1, 1, 1)


def test_h_shape():
    h = pattern_by_name("H").graph
    assert h.edge_count() == 9
    assert degree_sequence(h) == (4, 4, 4, 2, 2, 2)


def test_m_shape():
    m = pattern_by_name("M").graph
    assert m.edge_count() == 11
    assert degree_sequence(m) == (5, 4, 4, 3, 3, 3)


def test_house_is_c5_plus_chord():
    house = pattern_by_name("House").graph
    assert house.edge_count() == 6
    assert degree_sequence(house) == (3, 3, 2, 2, 2)
    assert is_isomorphic(house, complement(path_graph(5)))


# -- H reconstruction ------------------------------------------------------------
#
# Fact list A, vertex order (a3, a1, a2, A1, A2, u); fact list B, vertex
# order (aj, ai, b, Ai, B, u).  The pair lists classify all C(6,2) = 15
# vertex pairs.

H_FACTS_A = {
    "edges": [(0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (2, 3), (3, 4), (3, 5), (4, 5)],
    "nonedges": [(0, 5), (1, 2), (1, 3), (1, 5), (2, 4), (2, 5)],
}
H_FACTS_B = {
    "edges": [(0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (2, 3), (3, 4), (3, 5), (4, 5)],
    "nonedges": [(0, 5), (1, 2), (1, 3), (1, 5), (2, 4), (2, 5)],
}
# catalog H uses order (u, A1, A2, a1, a2, a3); this permutation maps
# catalog positions to fact-list-A positions
H_CATALOG_TO_FACTS = [5, 3, 4, 1, 2, 0]

# -- M reconstruction ------------------------------------------------------------
#
# Fact list A, vertex order (u, A1, a3, a1, A3, a2); fact list B, vertex
# order (u, A2, a4, a2, A4, w).

M_FACTS_A = {
    "edges": [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
              (1, 2), (1, 5), (2, 3), (2, 5), (3, 4), (4, 5)],
    "nonedges": [(1, 3), (1, 4), (2, 4), (3, 5)],
}
M_FACTS_B = {
    "edges": [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
              (1, 2), (1, 5), (2, 3), (2, 5), (3, 4), (4, 5)],
    "nonedges": [(1, 3), (1, 4), (2, 4), (3, 5)],
}
# catalog M has the 5-cycle 0-1-2-3-4 with chord 1-3 plus apex 5; this
# permutation maps catalog positions to fact-list-A positions
M_CATALOG_TO_FACTS = [3, 2, 1, 5, 4, 0]


def _facts_graph(facts: dict) -> "Graph":
    pairs = {tuple(sorted(p)) for p in facts["edges"]} | {
        tuple(sorted(p)) for p in facts["nonedges"]
    }
    # fully determined: every pair classified exactly once
    assert len(facts["edges"]) + len(facts["nonedges"]) == 15
    assert len(pairs) == 15
    return build(6, facts["edges"])


class TestHReconstruction:
    def test_both_fact_lists_give_the_same_graph(self):
        assert _facts_graph(H_FACTS_A) == _facts_graph(H_FACTS_B)

    def test_fact_graph_matches_catalog_exactly(self):
        h = pattern_by_name("H").graph
        g = _facts_graph(H_FACTS_A)
        assert relabel(g, H_CATALOG_TO_FACTS) == h
        assert is_isomorphic(g, h)


class TestMReconstruction:
    def test_both_fact_lists_give_the_same_graph(self):
        assert _facts_graph(M_FACTS_A) == _facts_graph(M_FACTS_B)

    def test_fact_graph_matches_catalog_exactly(self):
        m = pattern_by_name("M").graph
        g = _facts_graph(M_FACTS_A)
        assert relabel(g, M_CATALOG_TO_FACTS) == m
        assert is_isomorphic(g, m)

    def test_m_is_apex_over_house(self):
        house = pattern_by_name("House").graph
        joined = build(
            6, house.edges() + [(v, 5) for v in range(5)]
        )
        assert joined == pattern_by_name("M").graph

    def test_unique_house_subset_avoids_apex(self):
        m = pattern_by_name("M").graph
        emb = find_induced(m, pattern_by_name("House"))
        assert emb is not None
        assert emb.image() == frozenset(range(5))


# -- detection -------------------------------------------------------------------


class TestContainsInduced:
    def test_c5_contains_p4(self):
        assert contains_induced(cycle_graph(5), pattern_by_name("P4"))

    def test_complete_graph_contains_no_nonedge_pattern(self):
        k6 = complete_graph(6)
        assert not contains_induced(k6, pattern_by_name("2K2"))

    def test_p6_contains_p4_plus_isolated(self):
        assert contains_induced(path_graph(6), pattern_by_name("P4uK1"))

    def test_pattern_larger_than_host(self):
        assert not contains_induced(complete_graph(3), pattern_by_name("Chair"))


class TestFindInduced:
    def test_c5_p4_witness(self):
        c5 = cycle_graph(5)
        emb = find_induced(c5, pattern_by_name("P4"))
        assert emb is not None
        assert emb.verifies(c5, pattern_by_name("P4"))

    def test_k4_has_no_2k2(self):
        assert find_induced(complete_graph(4), pattern_by_name("2K2")) is None

    def test_witness_soundness_random(self):
        rng = random.Random(31337)
        hits = 0
        for _ in range(300):
            g = sample_gnp(rng.randint(4, 8), rng.choice([0.3, 0.5, 0.7]), rng.getrandbits(32))
            p = rng.choice(catalog())
            emb = find_induced(g, p)
            if emb is not None:
                hits += 1
                assert emb.verifies(g, p)
        assert hits > 50  # the sample really exercises the positive path


class TestClassMembership:
    def test_complete_graphs_in_every_class(self):
        for n in (1, 4, 8):
            g = complete_graph(n)
            for c in class_registry():
                assert is_in_class(g, c)

    def test_c6_not_in_class4(self):
        # vertices 0,1,3,4 of the 6-cycle induce two disjoint edges
        c6 = cycle_graph(6)
        assert contains_induced(c6, pattern_by_name("2K2"))
        assert not is_in_class(c6, class_by_name("class4"))

    def test_c5_in_class2(self):
        assert is_in_class(cycle_graph(5), class_by_name("class2"))

    def test_aliases(self):
        assert class_by_name("P4K1-Kite").name == "class1"
        assert class_by_name("chair-kite").name == "class2"
        assert class_by_name("K2K2bar-H").name == "class3"
        assert class_by_name("2K2-M").name == "class4"
        with pytest.raises(KeyError):
            class_by_name("nosuch")

    def test_registry_has_expected_forbidden_pairs(self):
        expected = {
            "class1": {"P4uK1", "Kite"},
            "class2": {"Chair", "Kite"},
            "class3": {"K2uK2bar", "H"},
            "class4": {"2K2", "M"},
        }
        for c in class_registry():
            assert {p.name for p in c.forbidden} == expected[c.name]

    def test_hereditary_property(self):
        rng = random.Random(2024)
        classes = class_registry()
        for _ in range(120):
            g = sample_gnp(rng.randint(3, 9), rng.choice([0.3, 0.5, 0.8]), rng.getrandbits(32))
            subset = [v for v in range(g.n) if rng.random() < 0.6]
            sub = induced_subgraph(g, subset)
            for c in classes:
                if is_in_class(g, c):
                    assert is_in_class(sub, c)


class TestSelfComplementary:
    def test_c5(self):
        assert is_self_complementary(cycle_graph(5))

    def test_p4(self):
        assert is_self_complementary(path_graph(4))

    def test_k3(self):
        assert not is_self_complementary(complete_graph(3))


def test_detection_agrees_with_naive_oracle_up_to_order_6():
    pats = catalog()
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            for p in pats:
                assert contains_induced(g, p) == naive_contains_induced(g, p.graph)


def test_chordless_paths_without_p4uk1_never_reach_p6():
    # in a graph with no induced P4-plus-isolated-vertex, every
    # chordless path has at most 5 vertices
    only_p4uk1 = ClassSpec("p4uk1-only", (pattern_by_name("P4uK1"),))
    p6 = Pattern("P6", path_graph(6))
    rng = random.Random(424242)
    found = 0
    attempts = 0
    while found < 500:
        attempts += 1
        assert attempts < 20000, "sampling for class members stalled"
        g = sample_gnp(rng.randint(6, 9), rng.choice([0.6, 0.75, 0.9]), rng.getrandbits(32))
        if not is_in_class(g, only_p4uk1):
            continue
        found += 1
        assert not contains_induced(g, p6)


def test_pattern_order_bounds():
    with pytest.raises(ValueError):
        Pattern("too-big", path_graph(7))
    with pytest.raises(ValueError):
        Pattern("too-small", empty_graph(1))


def test_embedding_verifies_rejects_bad_maps():
    p4 = pattern_by_name("P4")
    c5 = cycle_graph(5)
    assert not Embedding((0, 1, 2, 2)).verifies(c5, p4)   # not injective
    assert not Embedding((0, 1, 2)).verifies(c5, p4)      # wrong arity
    assert not Embedding((0, 2, 4, 1)).verifies(c5, p4)   # wrong adjacency
