import pytest
from hypothesis import given

from helpers import chain, diamond, flow_dags, merges_then_diverges
from safeflow.funnel import (
    SolutionTriplet,
    build_funnels,
    enumerate_funnel,
    expand_solution,
    report_maximal,
)
from safeflow.generators import gen_best, gen_worst
from safeflow.graph import build
from safeflow.oracle import left_maximal_ending_at, oracle_maximal_safe
from safeflow.safety import excess_flow
from safeflow.simple import enumerate_simple


def test_chain_funnels_are_prefixes():
    g = chain(length=4)
    F = build_funnels(g)
    for v in range(5):
        assert F[v].edges == set(range(v))
        assert F[v].converging(g) == set(range(v + 1))


def test_diamond_funnel_at_sink():
    g = diamond()
    F = build_funnels(g)[3]
    assert F.edges == {0, 1, 2, 3}
    assert F.converging(g) == {1, 2, 3}
    assert F.path_counts(g)[0] == (1, 2)


def test_diamond_triplets():
    g = diamond()
    res = enumerate_funnel(g)
    # characteristic edges are the ones entering the converging tree {1, 2, 3}
    assert list(res.solutions) == [3]
    assert sorted(res.solutions[3], key=lambda t: t.characteristic_edge) == \
        [SolutionTriplet(0, 0, 3), SolutionTriplet(1, 0, 2)]
    assert res.maximal_paths(g) == {(0, 2): 3, (1, 3): 2}


def test_expand_matches_excess():
    g = gen_worst(3)
    res = enumerate_funnel(g)
    for u, t in res.triplets():
        p = expand_solution(g, res.stars[u], t)
        assert g.heads[p[-1]] == u
        assert g.tails[p[0]] == t.start_vertex
        assert excess_flow(g, p) == t.excess


def test_vertex_with_two_source_and_two_sink_paths():
    # x1, x2 -> v, then v -> w directly and through y; every left-maximal
    # safe path into w survives
    g = build([(0, 2, 2), (1, 2, 2), (2, 4, 3), (2, 3, 1), (3, 4, 1)])
    F = build_funnels(g)[4]
    assert F.path_counts(g)[2] == (2, 2)
    assert enumerate_funnel(g).maximal_paths(g) == oracle_maximal_safe(g)
    assert enumerate_funnel(g).stats["promoted"] >= 1


def test_parallel_promotion_case():
    g = build([(0, 2, 1), (0, 2, 2), (0, 2, 2), (0, 4, 2), (0, 4, 3), (2, 4, 1), (2, 4, 4)], n=5)
    assert enumerate_funnel(g).maximal_paths(g) == oracle_maximal_safe(g)


def test_report_on_isolated_root():
    g = build([(0, 1, 1)], n=3)
    sol, _ = report_maximal(g, build_funnels(g)[2], 2)
    assert sol == []


@given(flow_dags(max_n=9))
def test_funnel_holds_left_maximal_paths(g):
    F = build_funnels(g)
    for v in range(g.n):
        lm = left_maximal_ending_at(g, v)
        assert F[v].edges == {e for p in lm for e in p}


@given(flow_dags(max_n=9))
def test_safe_paths_in_a_funnel_never_merge_then_diverge(g):
    for v in range(g.n):
        lm = sorted(left_maximal_ending_at(g, v))
        for p in lm:
            for q in lm:
                assert p == q or not merges_then_diverges(g, p, q)


@given(flow_dags(max_n=9))
def test_converging_vertices_succeed_the_rest(g):
    for F in build_funnels(g):
        conv = F.converging(g)
        for v in conv:
            assert all(g.heads[e] in conv for e in F.out_adj[v])


@given(flow_dags(max_n=10))
def test_agrees_with_simple(g):
    res = enumerate_funnel(g)
    assert res.maximal_paths(g) == enumerate_simple(g).maximal_paths()


@given(flow_dags(max_n=10))
def test_right_maximal_triplets(g):
    res = enumerate_funnel(g)
    for u, t in res.triplets():
        p = expand_solution(g, res.stars[u], t)
        e = g.max_out_edge(u)
        if e is not None:
            assert excess_flow(g, p + (e,)) <= 0


@pytest.mark.parametrize("fam", [gen_worst, gen_best])
@pytest.mark.parametrize("k", [2, 4, 6])
def test_families_agree(fam, k):
    g = fam(k)
    assert enumerate_funnel(g).maximal_paths(g) == enumerate_simple(g).maximal_paths()


@given(flow_dags())
def test_space_bound(g):
    total = sum(len(F) for F in build_funnels(g))
    pc = enumerate_simple(g).size
    assert total <= 2 * (g.n ** 2 + pc)
