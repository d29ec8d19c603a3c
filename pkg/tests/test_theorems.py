"""Verdict checks on the bundled graphs plus the seeded random invariants."""

import random

import pytest

from woi.graphs import WeightedOrientedGraph
from woi.symbolic import edge_ideal, symbolic_power
from woi.theorems import (DEFAULT_CONFIG, check_betti_monotonicity,
                          check_colon_lemmas, check_forest_bound_and_slopes,
                          check_lower_bound, check_second_power_bounds,
                          check_symbolic_vs_ordinary, check_witness_monomials,
                          clear_caches, reg_of, run_claims)


def by_claim(verdicts, claim):
    found = [v for v in verdicts if v.claim == claim]
    assert found, f"no verdict for {claim}"
    return found[0]


class TestLowerBound:
    def test_fig1_tight_at_k2_and_k3(self, figs):
        v2 = check_lower_bound(figs["fig1"], 2)
        assert v2.hypotheses_met and v2.holds
        assert v2.quantities["bound_proof_mode"] == 22
        assert v2.quantities["reg_symbolic"] == 22
        v3 = check_lower_bound(figs["fig1"], 3)
        assert v3.holds and v3.quantities["bound_proof_mode"] == 33
        assert v3.quantities["reg_symbolic"] == 33

    def test_fig1_k1(self, figs):
        v = check_lower_bound(figs["fig1"], 1)
        assert v.holds and v.quantities["bound_proof_mode"] == 11

    def test_single_edge_is_exact(self):
        D = WeightedOrientedGraph.build([("x", 1), ("y", 4)], [("x", "y")])
        for k in (1, 2, 3):
            v = check_lower_bound(D, k)
            assert v.holds
            assert v.quantities["bound_proof_mode"] == k * 5
            assert v.quantities["reg_symbolic"] == k * 5

    def test_non_sink_graph_still_records(self, figs):
        v = check_lower_bound(figs["fig3"], 2)
        assert not v.hypotheses_met
        assert v.holds is None
        assert v.quantities["reg_symbolic"] == 23


class TestSymbolicVsOrdinary:
    def test_fig1_values(self, figs):
        verdicts = check_symbolic_vs_ordinary(figs["fig1"], 3)
        thm1 = [v for v in verdicts if v.claim == "thm1"]
        assert [(v.quantities["reg_symbolic"], v.quantities["reg_ordinary"])
                for v in thm1] == [(22, 23), (33, 34)]
        assert all(v.holds for v in thm1)

    def test_fig2_equalities(self, figs):
        verdicts = check_symbolic_vs_ordinary(figs["fig2"], 3)
        for v in verdicts:
            if v.claim == "thm1":
                assert v.quantities["reg_symbolic"] == v.quantities["reg_ordinary"]

    def test_fig3_strict_inequalities(self, figs):
        verdicts = check_symbolic_vs_ordinary(figs["fig3"], 3)
        pairs = {(v.quantities["k"]): (v.quantities["reg_symbolic"],
                                       v.quantities["reg_ordinary"])
                 for v in verdicts if v.claim == "thm2"}
        assert pairs == {2: (23, 24), 3: (30, 32)}
        for v in verdicts:
            if v.claim in ("thm2", "cor1"):
                assert v.hypotheses_met and v.holds
            if v.claim == "thm1":
                assert not v.hypotheses_met


class TestSecondPowerBounds:
    def test_fig1_triangle_branch(self, figs):
        verdicts = check_second_power_bounds(figs["fig1"])
        v35 = by_claim(verdicts, "thm3.5")
        assert v35.quantities["max_triangle_quantity"] == 23
        assert v35.quantities["reg_ordinary_2"] == 23
        assert v35.quantities["branch"] == "triangle"
        assert v35.holds
        assert by_claim(verdicts, "thm3.4").holds
        v38 = by_claim(verdicts, "cor3.8")
        assert v38.hypotheses_met and v38.holds

    def test_fig2_symbolic_branch(self, figs):
        verdicts = check_second_power_bounds(figs["fig2"])
        v35 = by_claim(verdicts, "thm3.5")
        # weight sum over the closed triangle neighborhood is 21, giving 19
        assert v35.quantities["max_triangle_quantity"] == 19
        assert v35.quantities["reg_ordinary_2"] == 22
        assert v35.quantities["reg_symbolic_2"] == 22
        assert v35.quantities["branch"] == "symbolic"
        assert v35.holds
        v38 = by_claim(verdicts, "cor3.8")
        assert not v38.hypotheses_met  # the two regularities agree

    def test_unweighted_triangle(self):
        D = WeightedOrientedGraph.build(
            ["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])
        verdicts = check_second_power_bounds(D)
        v35 = by_claim(verdicts, "thm3.5")
        assert v35.quantities["max_triangle_quantity"] == 4
        assert v35.holds

    def test_triangle_free_degenerates_to_equality(self):
        D = WeightedOrientedGraph.build(
            [("a", 1), ("b", 3), ("c", 1), ("d", 2)],
            [("a", "b"), ("c", "b"), ("c", "d"), ("a", "d")])
        verdicts = check_second_power_bounds(D)
        v35 = by_claim(verdicts, "thm3.5")
        assert v35.quantities["triangle_count"] == 0
        assert v35.holds and v35.quantities["branch"] == "symbolic"

    def test_fig4_records_without_asserting(self, figs):
        verdicts = check_second_power_bounds(figs["fig4"])
        for v in verdicts:
            assert not v.hypotheses_met
            assert v.holds is None
        assert by_claim(verdicts, "thm3.4").quantities["reg_symbolic_2"] == 28


class TestColonLemmas:
    def test_fig1_k2_sweep_holds(self, figs):
        verdicts = check_colon_lemmas(figs["fig1"], 2)
        main = by_claim(verdicts, "lm4.1")
        assert main.hypotheses_met and main.holds
        assert main.quantities["box_volume"] == 75411
        assert main.quantities["failures"] == 0
        assert not by_claim(verdicts, "lm3.6").hypotheses_met

    def test_fig1_k3_sweep_holds(self, figs):
        main = by_claim(check_colon_lemmas(figs["fig1"], 3), "lm4.2")
        assert main.hypotheses_met and main.holds

    def test_fig3_degree_one_generator(self, figs):
        verdicts = check_colon_lemmas(figs["fig3"], 2)
        v36 = by_claim(verdicts, "lm3.6")
        assert v36.hypotheses_met and v36.holds
        assert v36.quantities["checked"] > 0

    def test_fig1_k3_specific_exponent(self, figs):
        # radical colon ideals at the weighted triangle-times-pendant exponent
        D = figs["fig1"]
        Isym = symbolic_power(D, 3)
        Iord = edge_ideal(D).power(3)
        a = (1, 1, 1, 3, 0, 0)  # x1 x2 x3 y1^3
        assert not Isym.contains(a)
        L, M = Isym.sqrt_colon(a), Iord.sqrt_colon(a)
        extras = [g for g in L.gens if not M.contains(g)]
        assert extras, "the two radical colons differ at this exponent"
        for g in extras:
            assert sum(g) == 1
            j = g.index(1)
            assert a[j] == 0

    def test_fig3_k2_specific_exponent(self, figs):
        D = figs["fig3"]
        Isym = symbolic_power(D, 2)
        a = (0, 4, 7, 0, 0, 0)  # x2^4 x3^7
        assert not Isym.contains(a)
        x1 = (1, 0, 0, 0, 0, 0)
        assert Isym.sqrt_colon(a).contains(x1)
        assert a[0] == 0

    def test_k_validation(self, figs):
        with pytest.raises(ValueError):
            check_colon_lemmas(figs["fig1"], 4)


class TestBettiMonotonicity:
    def test_fig1_subgraph(self, figs):
        v = check_betti_monotonicity(figs["fig1"], ("x1", "x2", "x3", "y1"), 2)
        assert v.hypotheses_met and v.holds
        assert v.quantities["coarse_violations"] == 0

    def test_identity_subgraph(self, figs):
        D = figs["fig2"]
        v = check_betti_monotonicity(D, D.names, 2)
        assert v.holds
        assert v.quantities["reg_sub_symbolic"] == v.quantities["reg_full_symbolic"]

    def test_fig4_counterexample_recorded(self, figs):
        v = check_betti_monotonicity(figs["fig4"], ("x1", "x2", "y1"), 2)
        assert not v.hypotheses_met and v.holds is None
        assert v.quantities["reg_full_symbolic"] == 28
        assert v.quantities["reg_sub_symbolic"] == 22
        assert v.quantities["reg_sub_ordinary"] == 29
        assert v.quantities["coarse_violations"] > 0


class TestForestBoundAndSlopes:
    def test_fig3_bound_holds(self, figs):
        vb, vs = check_forest_bound_and_slopes(figs["fig3"], 3)
        assert vb.claim == "forest-bound"
        assert vb.hypotheses_met and vb.holds
        assert vb.quantities["bounds"] == {2: 23, 3: 31}
        assert vb.quantities["reg_symbolic"] == {2: 23, 3: 30}
        assert vs.quantities["differences"] == [7, 7]

    def test_small_oriented_path(self):
        D = WeightedOrientedGraph.build(
            [("a", 1), ("b", 3), ("c", 3)], [("a", "b"), ("b", "c")])
        vb, _ = check_forest_bound_and_slopes(D, 3)
        assert vb.hypotheses_met and vb.holds
        assert vb.quantities["bounds"] == {2: 9, 3: 13}
        assert vb.quantities["reg_symbolic"] == {2: 8, 3: 12}

    def test_fig1_slope_report(self, figs):
        _, vs = check_forest_bound_and_slopes(figs["fig1"], 3)
        assert vs.quantities["differences"] == [11, 11]
        assert vs.quantities["max_weight_plus_one"] == 11
        assert vs.quantities["differences_equal_max_weight_plus_one"]
        assert vs.holds is None

    def test_fig1_fails_forest_hypothesis(self, figs):
        vb, _ = check_forest_bound_and_slopes(figs["fig1"], 2)
        assert not vb.hypotheses_met
        assert any("cycle" in r for r in vb.reasons)


class TestRegistryAndReplay:
    def test_run_all_claims_on_fig2(self, figs):
        verdicts = run_claims(figs["fig2"], "all", kmax=3)
        assert not [v for v in verdicts if v.holds is False]
        claims = {v.claim for v in verdicts}
        assert {"thm1", "thm3.4", "thm3.5", "thm3.6", "lm4.1", "lm4.2",
                "pro2", "slopes"} <= claims

    def test_unknown_claim(self, figs):
        with pytest.raises(ValueError):
            run_claims(figs["fig1"], "thmX")

    def test_replay_after_cache_clear(self, figs):
        """Verdict quantities are recomputable from scratch (no cache cross-talk)."""
        D = figs["fig1"]
        before = [v.to_json() for v in check_second_power_bounds(D)]
        clear_caches()
        after = [v.to_json() for v in check_second_power_bounds(D)]
        for b, a in zip(before, after):
            b.pop("timings"), a.pop("timings")
            assert b == a

    def test_reg_of_matches_public_function(self, figs):
        from woi.regularity import regularity
        I = edge_ideal(figs["fig1"]).power(2)
        assert reg_of(I, DEFAULT_CONFIG) == regularity(I)


class TestRandomSettingPathInvariant:
    def test_symbolic_leq_ordinary_on_200_setting_graphs(self):
        """reg(I^(k)) <= reg(I^k) for k = 2, 3 on graphs with an induced
        weighted directed length-2 path; 200 seeded cases."""
        from woi.generators import random_setting_graph
        rng = random.Random(0x5EED03)
        for trial in range(200):
            D = random_setting_graph(rng, nmax=7, wmax=4)
            for v in check_symbolic_vs_ordinary(D, 3):
                if v.claim == "thm2":
                    assert v.hypotheses_met, (trial, D.to_document())
                    assert v.holds, (trial, D.to_document(), v.quantities)
