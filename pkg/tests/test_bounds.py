import json
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_bipartite, random_graph
from ngspec.bounds import (
    BOUNDS, EPS, EQUALITY_STRUCTURE, EqualityClass, GraphData, Regime, bipartite_case_analysis,
    bipartite_connectivity_bound, bipartite_mu1_bound, das_bound, das_rhs, dominating_quotient_bound,
    equality_classifier, evaluate, lap_spread_conjecture, merris_bound, mu_product_bound,
    q_product_check, q_sum_bound, q_sum_rhs,
)
from ngspec.families import (
    Complete, CompleteBipartite, Cycle, DisjointUnion, EmptyGraph, Join, Path, SaturatedBipartite,
    SplitJoin, Star, construct,
)
from ngspec.graph import Graph, enumerate_labelled
from ngspec.graph6 import parse_graph6

K4, P4, C5 = construct(Complete(4)), construct(Path(4)), construct(Cycle(5))
K23 = construct(CompleteBipartite(2, 3))


def star(n):
    return construct(Star(n))


# ---- degree bounds ---------------------------------------------------------------


def test_merris_c5_regular():
    r = merris_bound(C5)
    assert r.lhs == pytest.approx(4) and r.rhs == 4
    assert r.equality and r.equality_class is EqualityClass.REGULAR


def test_merris_k23_semiregular():
    r = merris_bound(K23)
    assert r.lhs == pytest.approx(5) and r.rhs == 5
    assert r.equality and r.equality_class is EqualityClass.BIPARTITE_SEMIREGULAR


def test_merris_star_plus_edge_strict():
    r = merris_bound(star(4).add_edge(1, 2))
    assert r.holds and not r.equality and r.slack > 1e-3


def test_merris_empty_not_applicable():
    assert not merris_bound(Graph.empty(3)).applicable


@pytest.mark.parametrize("n", range(2, 9))
def test_das_complete(n):
    r = das_bound(construct(Complete(n)))
    assert r.lhs == r.rhs == 2 * n - 2
    assert r.equality


@pytest.mark.parametrize("n", range(3, 9))
def test_das_star(n):
    r = das_bound(star(n))
    assert r.lhs == r.rhs
    assert r.equality and r.equality_class is EqualityClass.STAR


def test_das_rhs_exact():
    assert das_rhs(5, 4, 4, 1) == Fraction(8, 4) + Fraction(12, 4) + 3 * Fraction(0)
    assert isinstance(das_rhs(7, 5, 3, 1), Fraction)


def test_random_degree_bounds_hold(rng):
    for _ in range(30):
        g = random_graph(rng, 8, 0.5)
        d, m = das_bound(g), merris_bound(g)
        assert d.holds and m.holds
        assert m.lhs <= m.rhs + EPS and m.rhs <= d.rhs  # q1 <= max(d+m) <= das rhs


def test_dominating_quotient_bound(rng):
    for _ in range(50):
        assert dominating_quotient_bound(random_graph(rng, 9, 0.4)).holds
    r = dominating_quotient_bound(construct(SplitJoin(9)))
    assert r.equality  # the partition is equitable here
    assert r.rhs == pytest.approx((11 + math.sqrt(105)) / 2)


# ---- bipartite bounds ---------------------------------------------------------------


@pytest.mark.parametrize("n", range(3, 10))
def test_bip_connectivity_star(n):
    r = bipartite_connectivity_bound(star(n))
    assert r.lhs == 1 and r.rhs == pytest.approx(1)
    assert r.equality and r.equality_class is EqualityClass.STAR


def test_bip_connectivity_k2_is_not_an_equality_class_member():
    r = bipartite_connectivity_bound(construct(Complete(2)))
    assert r.holds and not r.equality


def test_bip_connectivity_k34():
    r = bipartite_connectivity_bound(construct(CompleteBipartite(3, 4)))
    assert r.lhs == 1 and r.rhs == pytest.approx(3)
    assert r.holds and not r.equality


def test_bip_connectivity_bip_h():
    r = bipartite_connectivity_bound(construct(SaturatedBipartite(8, 3, 2, 2)))
    assert r.lhs == pytest.approx(2 / 5)
    assert r.holds and r.rhs >= 2 / 5


def test_bip_bounds_not_applicable():
    for fn in (bipartite_connectivity_bound, bipartite_case_analysis):
        r = fn(construct(Complete(3)))
        assert not r.applicable and r.holds and r.equality_class is EqualityClass.NOT_APPLICABLE
    assert not all(r.applicable for r in bipartite_mu1_bound(C5))
    # two disjoint edges: no vertex of X sees all of Y, so t = 0
    two_k2 = construct(DisjointUnion(Complete(2), Complete(2)))
    assert not bipartite_connectivity_bound(two_k2).applicable


def test_bip_mu1_k23():
    first, second = bipartite_mu1_bound(K23)
    assert first.lhs == pytest.approx(5) and first.rhs == 5
    assert first.equality and first.equality_class is EqualityClass.COMPLETE_BIPARTITE
    assert second.lhs == 5 and second.rhs == 5 and second.equality


def test_bip_mu1_star5():
    first, second = bipartite_mu1_bound(star(5))
    assert first.lhs == pytest.approx(5)
    assert second.rhs == 5


def test_bip_mu1_p4():
    first, _ = bipartite_mu1_bound(P4)
    assert first.lhs == pytest.approx(2 + math.sqrt(2)) and first.rhs == 3.5
    assert first.holds and not first.equality


def test_chain_exact(rng):
    for _ in range(200):
        g = random_bipartite(rng, int(rng.integers(2, 11)))
        first, second = bipartite_mu1_bound(g)
        if second.applicable:
            assert second.holds and first.holds


def test_cases_closed_form_n_over_2():
    r = bipartite_case_analysis(construct(SaturatedBipartite(8, 4, 3, 1)))
    assert r.detail.startswith("case2:t=k-1=n/2-1")
    assert r.holds
    assert r.lhs == pytest.approx((8 + math.sqrt(40)) / 2)


def test_cases_case3():
    r = bipartite_case_analysis(construct(SaturatedBipartite(10, 4, 1, 3)))
    assert r.detail == "case3" and r.rhs == pytest.approx(9.3) and r.holds


def test_cases_case4_connected_holds(rng):
    seen = 0
    for _ in range(400):
        g = random_bipartite(rng, int(rng.integers(4, 11)), 0.5)
        if not g.is_connected():
            continue
        r = bipartite_case_analysis(g)
        if r.detail.startswith("case4"):
            seen += 1
            assert r.holds and r.lhs < r.rhs
    assert seen > 10


def test_case4_fails_with_equality_on_disconnected_graphs():
    # K_{2,2} plus an isolated vertex: X = {0,1}, no vertex of X sees all of Y
    g = parse_graph6("D]?")
    r = bipartite_case_analysis(g)
    assert r.detail == "case4,disconnected"
    assert r.lhs == pytest.approx(4) and r.rhs == 4
    assert not r.holds


def test_case2_fails_with_equality_when_n_is_2k():
    g = parse_graph6("EFj?")
    r = bipartite_case_analysis(g)
    assert r.detail == "case2:t<=k-2"
    assert r.lhs == pytest.approx(5) and not r.holds


# ---- Nordhaus-Gaddum checks --------------------------------------------------------


@pytest.mark.parametrize("n", range(3, 9))
def test_spread_star(n):
    r = lap_spread_conjecture(star(n))
    assert r.lhs == pytest.approx(n - 1)
    assert r.equality and r.equality_class is EqualityClass.JOIN_K1_DISCONNECTED
    assert r.detail == "forms consistent"


def test_spread_complete_and_p4():
    assert lap_spread_conjecture(construct(Complete(6))).lhs == pytest.approx(0, abs=1e-9)
    r = lap_spread_conjecture(P4)
    assert r.lhs == pytest.approx(2 * math.sqrt(2)) and not r.equality


def test_spread_regime():
    assert lap_spread_conjecture(P4).regime is Regime.THEOREM
    g = construct(Join(Complete(3), DisjointUnion(Cycle(5), Complete(3))))
    if GraphData(g).co_bipartite:
        pytest.skip("complement bipartite")
    assert lap_spread_conjecture(g).regime is Regime.CONJECTURE


def test_spread_forms_consistent(rng):
    for _ in range(100):
        assert lap_spread_conjecture(random_graph(rng, 9)).detail == "forms consistent"


def test_mu_product_examples():
    r = mu_product_bound(star(4))
    assert r.lhs == pytest.approx(12) and r.equality and r.equality_class is EqualityClass.STAR
    r = mu_product_bound(P4)
    assert r.lhs == pytest.approx(6 + 4 * math.sqrt(2)) and not r.equality
    assert mu_product_bound(K4).lhs == pytest.approx(0, abs=1e-9)


def test_mu_product_equality_beyond_stars():
    # K_{1,2} plus an isolated vertex: its complement is K_1 joined with K_2 + K_1
    g = construct(DisjointUnion(Path(3), EmptyGraph(1)))
    r = mu_product_bound(g)
    assert r.lhs == pytest.approx(12)
    assert r.equality and r.equality_class is EqualityClass.JOIN_K1_DISCONNECTED


def test_q_sum_star4():
    refined, coarse = q_sum_bound(star(4))
    assert refined.lhs == pytest.approx(8)
    assert coarse.rhs == 8 and coarse.equality and coarse.equality_class is EqualityClass.STAR


def test_q_sum_c5():
    refined, coarse = q_sum_bound(C5)
    assert refined.lhs == pytest.approx(8) and refined.rhs == 8
    assert refined.equality and refined.equality_class is EqualityClass.REGULAR
    assert not coarse.equality


def test_q_sum_random(rng):
    for _ in range(50):
        refined, coarse = q_sum_bound(random_graph(rng, 8))
        assert refined.holds and coarse.holds


def test_q_sum_rhs_below_3n_minus_4():
    for n in range(2, 40):
        for x in range(0, n - 1):
            assert q_sum_rhs(n, x, 0) <= 3 * n - 4


@pytest.mark.parametrize("n", range(3, 10))
def test_q_product_star(n):
    r = q_product_check(star(n))
    assert r.lhs == pytest.approx(2 * n * (n - 2)) and r.equality
    assert r.regime is Regime.DISPROVED


def test_q_product_h9():
    r = q_product_check(construct(SplitJoin(9)))
    assert r.lhs == pytest.approx(6 * (11 + math.sqrt(105)), abs=1e-8)
    assert r.rhs == 126 and not r.holds and r.violated
    assert q_product_check(K4).lhs == pytest.approx(0, abs=1e-9)


# ---- classification and reports ------------------------------------------------------


def test_classifier_examples():
    j = construct(Join(EmptyGraph(1), DisjointUnion(Complete(2), Complete(1))))
    assert EqualityClass.JOIN_K1_DISCONNECTED in equality_classifier(j)
    c6 = equality_classifier(construct(Cycle(6)))
    assert {EqualityClass.REGULAR, EqualityClass.BIPARTITE_SEMIREGULAR} <= c6
    assert equality_classifier(P4) == {EqualityClass.OTHER}
    assert EqualityClass.STAR in equality_classifier(star(5))
    assert EqualityClass.COMPLETE_BIPARTITE in equality_classifier(K23)


def test_report_json_fields():
    r = mu_product_bound(star(4))
    j = r.to_json()
    for key in ("bound_id", "n", "lhs", "rhs", "slack", "holds", "equality", "equality_class",
                "graph6"):
        assert key in j
    assert json.loads(json.dumps(j)) == j
    assert j["graph6"] == "Cs"


def test_equality_implies_holds(rng):
    for _ in range(60):
        for r in evaluate(random_graph(rng, int(rng.integers(2, 9)), rng.random())):
            if r.equality:
                assert r.holds


def test_evaluate_registry():
    reports = evaluate(P4)
    assert [r.bound_id for r in reports] == list(BOUNDS)


def test_numeric_equality_matches_structure_exhaustive():
    # |slack| <= eps exactly on the structural equality class, every graph n <= 5
    for n in range(2, 6):
        for g in enumerate_labelled(n):
            data = GraphData(g)
            for b, structural in EQUALITY_STRUCTURE.items():
                r = BOUNDS[b].evaluate(data)
                if not r.applicable:
                    continue
                near = abs(r.slack) <= EPS
                assert near == structural(data), (b, r.graph6)
                assert r.equality == near


def test_numeric_equality_matches_structure_n6():
    from ngspec import batch
    n = 6
    s = batch.screen(n, 0, 1 << 15, list(EQUALITY_STRUCTURE))
    for i in range(len(s)):
        data = s.data(i)
        for b, structural in EQUALITY_STRUCTURE.items():
            r = BOUNDS[b].evaluate(data)
            if r.applicable:
                assert (abs(r.slack) <= EPS) == structural(data), (b, r.graph6)


def test_case_analysis_failures_are_exactly_the_boundary_cases():
    # the only failures of the strict case claims up to n = 6 are equalities:
    # disconnected graphs in case 4, and ell = 1, t <= k-2 with n = 2k in case 2
    failures = 0
    for n in range(4, 7):
        for g in enumerate_labelled(n):
            r = bipartite_case_analysis(g)
            if not r.violated:
                continue
            failures += 1
            assert abs(r.slack) <= EPS
            if r.detail.startswith("case4"):
                assert r.detail.endswith("disconnected")
            else:
                assert r.detail == "case2:t<=k-2"
                data = GraphData(g)
                assert 2 * data.bip.k == n and data.bip.ell == 1
    assert failures > 0


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 9).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, (1 << (n * (n - 1) // 2)) - 1))))
def test_nordhaus_gaddum_symmetry(nm):
    # sum and product checks read the same numbers from G and its complement
    n, mask = nm
    g = Graph.from_edge_mask(n, mask)
    for fn in (mu_product_bound, q_product_check):
        a, b = fn(g), fn(g.complement())
        assert a.lhs == pytest.approx(b.lhs, abs=1e-9)
        assert a.equality == b.equality
    a, b = q_sum_bound(g)[1], q_sum_bound(g.complement())[1]
    assert a.lhs == pytest.approx(b.lhs, abs=1e-9)
    for r in evaluate(g):
        assert not r.equality or r.holds
