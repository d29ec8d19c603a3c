"""Graph model: parsing, normalization, queries, motifs."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from woi.errors import GraphError
from woi.graphs import (WeightedOrientedGraph, detect_setting_paths,
                        enumerate_motifs, five_cycles, gaps,
                        induced_matchings, parse_graph, triangles)

import prop_core


def doc(vertices, edges, name=None):
    d = {"vertices": [{"id": v} if isinstance(v, str)
                      else {"id": v[0], "weight": v[1]} for v in vertices],
         "edges": [{"from": a, "to": b} for a, b in edges]}
    if name:
        d["name"] = name
    return d


class TestParsing:
    def test_fig1_document(self, corpus):
        D = parse_graph(corpus["fig1"].document)
        assert D.n == 6
        cls = D.classify()
        assert cls.v_plus == ("y1", "y2", "y3")
        assert cls.v_plus_all_sinks
        assert cls.kinds == {"x1": "internal", "x2": "internal", "x3": "internal",
                             "y1": "sink", "y2": "sink", "y3": "sink"}

    def test_source_weight_normalized(self):
        D = parse_graph(doc([("x1", 5), "x2"], [("x1", "x2")]))
        assert D.weight("x1") == 1

    def test_isolated_vertex_is_weight_one_source(self):
        D = parse_graph(doc([("z", 9)], []))
        assert D.weight("z") == 1
        assert D.classify().kinds["z"] == "isolated"

    def test_loop_edge_rejected(self):
        with pytest.raises(GraphError, match="loop edge at 'x1'"):
            parse_graph(doc(["x1"], [("x1", "x1")]))

    def test_duplicate_unordered_pair_rejected(self):
        with pytest.raises(GraphError, match="duplicate edge"):
            parse_graph(doc(["a", "b"], [("a", "b"), ("b", "a")]))

    def test_duplicate_name_rejected(self):
        with pytest.raises(GraphError, match="duplicate vertex name: 'a'"):
            parse_graph(doc(["a", "a"], []))

    def test_nonpositive_weight_rejected(self):
        with pytest.raises(GraphError, match="nonpositive weight 0"):
            parse_graph(doc([("a", 0), "b"], [("a", "b")]))

    def test_unknown_endpoint_rejected(self):
        with pytest.raises(GraphError, match="'zz' is not a declared vertex"):
            parse_graph(doc(["a"], [("a", "zz")]))

    def test_round_trip(self, corpus):
        for entry in corpus.values():
            D = entry.graph()
            assert parse_graph(D.to_document()) == D


class TestClassification:
    def test_fig4_mixed(self, figs):
        cls = figs["fig4"].classify()
        assert cls.kinds["x1"] == "internal"
        assert "x1" in cls.v_plus
        assert not cls.v_plus_all_sinks

    def test_single_vertex(self):
        D = parse_graph(doc(["v"], []))
        assert D.classify().kinds["v"] == "isolated"


class TestNeighborhoods:
    def test_fig1_closed_triangle(self, figs):
        D = figs["fig1"]
        assert set(D.neighborhood(["x1", "x2", "x3"], "closed")) == set(D.names)

    def test_empty_set(self, figs):
        assert figs["fig1"].neighborhood([], "closed") == ()

    def test_directed_path_in_out(self):
        D = parse_graph(doc(["a", "b", "c"], [("a", "b"), ("b", "c")]))
        assert D.neighborhood(["b"], "in") == ("a",)
        assert D.neighborhood(["b"], "out") == ("c",)

    def test_unknown_vertex(self, figs):
        with pytest.raises(GraphError):
            figs["fig1"].neighborhood(["nope"], "closed")

    def test_fig1_deleting_triangle_neighborhood_empties_graph(self, figs):
        D = figs["fig1"]
        # oracle: closed neighborhood by direct adjacency scan
        tri = {"x1", "x2", "x3"}
        closed = set(tri)
        for i, j in D.underlying_edges():
            if D.names[i] in tri:
                closed.add(D.names[j])
            if D.names[j] in tri:
                closed.add(D.names[i])
        assert set(D.neighborhood(sorted(tri), "closed")) == closed
        rest = D.induced_subgraph([v for v in D.names if v not in closed])
        assert rest.n == 0 and not rest.edges


class TestInducedSubgraph:
    def test_fig4_prime(self, figs, corpus):
        from woi.symbolic import edge_ideal
        sub = figs["fig4"].induced_subgraph(["x1", "x2", "y1"])
        prime = figs["fig4-prime"]
        assert [v.name for v in sub.vertices] == [v.name for v in prime.vertices]
        assert [v.weight for v in sub.vertices] == [v.weight for v in prime.vertices]
        assert str(edge_ideal(sub)) == "(x1^8*y1, x1*x2^10)"

    def test_identity(self, figs):
        D = figs["fig2"]
        sub = D.induced_subgraph(D.names)
        assert sub.vertices == D.vertices and sub.edges == D.edges

    def test_renormalizes_new_sources(self):
        D = parse_graph(doc([("a", 1), ("b", 4), ("c", 2)],
                            [("a", "b"), ("b", "c")]))
        assert D.weight("b") == 4
        sub = D.induced_subgraph(["b", "c"])
        assert sub.weight("b") == 1  # b lost its in-edge
        assert sub.weight("c") == 2


class TestMotifs:
    def test_fig1_triangles_and_gaps(self, figs):
        D = figs["fig1"]
        assert triangles(D) == [("x1", "x2", "x3")]
        assert gaps(D) == []
        assert len(induced_matchings(D, 1)) == 6
        assert induced_matchings(D, 2) == []

    def test_four_cycle_is_gap_free(self):
        # every 2-matching of the 4-cycle induces the whole cycle, so the
        # graph is gap-free and has no induced 2-matching
        D = parse_graph(doc(["a", "b", "c", "d"],
                            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]))
        assert triangles(D) == []
        assert gaps(D) == []
        assert induced_matchings(D, 2) == []

    def test_six_cycle_has_induced_two_matchings(self):
        D = parse_graph(doc(list("abcdef"),
                            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"),
                             ("e", "f"), ("f", "a")]))
        matchings = induced_matchings(D, 2)
        assert (("a", "b"), ("d", "e")) in matchings
        assert len(matchings) == 3
        assert gaps(D) == matchings

    def test_five_cycle_enumeration(self):
        D = parse_graph(doc(list("abcde"),
                            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"),
                             ("e", "a")]))
        assert len(five_cycles(D)) == 1
        # chord creates no second 5-cycle on 5 vertices but keeps the first
        D2 = parse_graph(doc(list("abcde"),
                             [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"),
                              ("e", "a"), ("a", "c")]))
        assert len(five_cycles(D2)) == 1

    def test_unknown_kind(self, figs):
        with pytest.raises(GraphError):
            enumerate_motifs(figs["fig1"], "hexagon")

    def test_matching_size_validation(self, figs):
        with pytest.raises(GraphError):
            induced_matchings(figs["fig1"], 0)


class TestSettingPaths:
    def test_fig3_has_the_induced_path(self, figs):
        paths = detect_setting_paths(figs["fig3"])
        triples = {(p.tail, p.mid, p.head) for p in paths}
        assert ("x1", "x2", "x3") in triples
        assert all(p.induced for p in paths)

    def test_fig1_has_none(self, figs):
        assert detect_setting_paths(figs["fig1"]) == []

    def test_oriented_triangle_is_directed_only(self):
        D = parse_graph(doc([("a", 1), ("b", 2), ("c", 1)],
                            [("a", "b"), ("b", "c"), ("c", "a")]))
        paths = detect_setting_paths(D)
        assert [(p.tail, p.mid, p.head) for p in paths] == [("a", "b", "c")]
        assert not paths[0].induced


class TestBipartite:
    def test_fig3_tree(self, figs):
        ok, sides = figs["fig3"].is_bipartite()
        assert ok
        assert set(sides[0]) | set(sides[1]) == set(figs["fig3"].names)

    def test_fig1_triangle_witness(self, figs):
        ok, cycle = figs["fig1"].is_bipartite()
        assert not ok
        assert len(cycle) == 3
        assert set(cycle) == {"x1", "x2", "x3"}

    def test_empty_graph(self):
        D = parse_graph(doc([], []))
        assert D.is_bipartite()[0]


# -- property wrappers ---------------------------------------------------------


@given(st.integers(0, 10**9))
@settings(max_examples=40)
def test_neighborhood_union_property(seed):
    prop_core.neighborhood_union(random.Random(seed))


@given(st.integers(0, 10**9))
@settings(max_examples=40)
def test_induced_subgraph_composition_property(seed):
    prop_core.induced_subgraph_composition(random.Random(seed))


@given(st.integers(0, 10**9))
@settings(max_examples=30)
def test_motifs_vs_bruteforce_property(seed):
    prop_core.motifs_vs_bruteforce(random.Random(seed))


@given(st.integers(0, 10**9))
@settings(max_examples=30)
def test_bipartite_witness_property(seed):
    prop_core.bipartite_witness(random.Random(seed))
