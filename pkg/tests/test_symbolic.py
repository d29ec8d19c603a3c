"""Edge ideals, minimal primes, symbolic powers, witness monomials."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from woi.errors import HypothesisError
from woi.graphs import WeightedOrientedGraph
from woi.monomials import MonomialIdeal
from woi.symbolic import (edge_ideal, ideals_equal, lemma35_witness,
                          minimal_primes, symbolic_power, underlying_edge_ideal)

import prop_core


def graph(vertices, edges):
    return WeightedOrientedGraph.build(vertices, edges)


class TestEdgeIdeal:
    def test_fig1(self, figs):
        I = edge_ideal(figs["fig1"])
        assert str(I) == ("(x2*x3, x1*x3, x1*x2, x1*y1^3, x2*y2^9, x3*y3^10)")

    def test_fig3(self, figs):
        I = edge_ideal(figs["fig3"])
        expected = MonomialIdeal(
            figs["fig3"].names,
            [(1, 4, 0, 0, 0, 0), (0, 1, 7, 0, 0, 0), (6, 0, 0, 1, 0, 0),
             (0, 4, 0, 0, 1, 0), (0, 0, 7, 0, 0, 1)])
        assert I == expected

    def test_single_weighted_edge(self):
        D = graph([("x", 1), ("y", 5)], [("x", "y")])
        assert edge_ideal(D).gens == ((1, 5),)

    def test_underlying_is_radical(self, figs):
        for D in figs.values():
            assert underlying_edge_ideal(D) == edge_ideal(D).radical()


class TestMinimalPrimes:
    def test_fig4(self, figs):
        assert minimal_primes(figs["fig4"]) == (
            ("x1", "x2"), ("x1", "y2"), ("x2", "y1"))

    def test_triangle(self):
        D = graph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])
        assert minimal_primes(D) == (("a", "b"), ("a", "c"), ("b", "c"))

    def test_single_edge(self):
        D = graph(["x", "y"], [("x", "y")])
        assert minimal_primes(D) == (("x",), ("y",))

    def test_edgeless(self):
        D = graph(["x", "y"], [])
        assert minimal_primes(D) == ()


class TestSymbolicPower:
    def test_triangle_square_adds_product_monomial(self):
        D = graph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])
        I = edge_ideal(D)
        sym = symbolic_power(D, 2, method="primes")
        expected = MonomialIdeal(D.names, list(I.power(2).gens) + [(1, 1, 1)])
        assert sym == expected
        assert symbolic_power(D, 2, method="sink-formula") == expected

    def test_principal_all_powers_agree(self):
        D = graph([("x", 1), ("y", 4)], [("x", "y")])
        I = edge_ideal(D)
        for k in (1, 2, 3):
            assert symbolic_power(D, k) == I.power(k)

    def test_fig1_square_differs_by_triangle(self, figs):
        D = figs["fig1"]
        sym = symbolic_power(D, 2)
        ordinary = edge_ideal(D).power(2)
        assert not ideals_equal(sym, ordinary)
        tri = (1, 1, 1, 0, 0, 0)
        assert sym.contains(tri) and not ordinary.contains(tri)

    def test_bipartite_sink_square_equals_ordinary(self):
        # 4-cycle oriented so both weighted vertices are sinks
        D = graph([("a", 1), ("b", 3), ("c", 1), ("d", 2)],
                  [("a", "b"), ("c", "b"), ("c", "d"), ("a", "d")])
        assert D.classify().v_plus_all_sinks
        assert ideals_equal(symbolic_power(D, 2), edge_ideal(D).power(2))

    def test_first_symbolic_power_with_embedded_prime(self, figs):
        # for fig4-prime the first symbolic power strictly contains the ideal
        D = figs["fig4-prime"]
        I = edge_ideal(D)
        sym = symbolic_power(D, 1)
        assert sym != I
        for g in I.gens:
            assert sym.contains(g)

    def test_method_validation(self, figs):
        with pytest.raises(ValueError):
            symbolic_power(figs["fig1"], 2, method="magic")
        with pytest.raises(ValueError):
            symbolic_power(figs["fig1"], 0)

    def test_sink_formula_hypothesis_check(self, figs):
        with pytest.raises(HypothesisError):
            symbolic_power(figs["fig3"], 2, method="sink-formula")
        with pytest.raises(HypothesisError):
            symbolic_power(figs["fig1"], 4, method="sink-formula")

    def test_auto_equals_primes_on_corpus(self, figs):
        for D in figs.values():
            for k in (1, 2, 3):
                assert symbolic_power(D, k, "auto") == symbolic_power(D, k, "primes")


class TestWitnessMonomials:
    def test_fig3_k2(self, figs):
        rep = lemma35_witness(figs["fig3"], ("x1", "x2", "x3"), 2)
        assert rep.monomial == (1, 4, 7, 0, 0, 0)
        assert rep.in_symbolic and not rep.in_ordinary

    def test_fig3_k3(self, figs):
        rep = lemma35_witness(figs["fig3"], ("x1", "x2", "x3"), 3)
        assert rep.monomial == (1, 5, 14, 0, 0, 0)
        assert rep.in_symbolic and not rep.in_ordinary

    def test_unweighted_middle_rejected(self):
        D = graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
        with pytest.raises(HypothesisError, match="weight >= 2"):
            lemma35_witness(D, ("a", "b", "c"), 2)

    def test_missing_edge_rejected(self, figs):
        with pytest.raises(HypothesisError, match="directed edges"):
            lemma35_witness(figs["fig3"], ("x3", "x2", "x1"), 2)

    def test_k_validation(self, figs):
        with pytest.raises(HypothesisError):
            lemma35_witness(figs["fig3"], ("x1", "x2", "x3"), 1)


# -- property wrappers ------------------------------------------------------


@given(st.integers(0, 10**9))
@settings(max_examples=25)
def test_symbolic_contains_ordinary_property(seed):
    prop_core.symbolic_contains_ordinary(random.Random(seed))


@given(st.integers(0, 10**9))
@settings(max_examples=20)
def test_symbolic_product_rule_property(seed):
    prop_core.symbolic_product_rule(random.Random(seed))


@given(st.integers(0, 10**9))
@settings(max_examples=20)
def test_symbolic_radical_property(seed):
    prop_core.symbolic_radical(random.Random(seed))


@given(st.integers(0, 10**9))
@settings(max_examples=20)
def test_sink_route_agreement_property(seed):
    prop_core.sink_route_agreement(random.Random(seed))


@given(st.integers(0, 10**9))
@settings(max_examples=25)
def test_minimal_primes_bruteforce_property(seed):
    prop_core.minimal_primes_vs_bruteforce(random.Random(seed))
