"""
Unit and regression test for the mcmatching module.
"""
import time
import pytest
import numpy as np
from matchcover.mcgraph import Graph
from matchcover import mcgenerators
from matchcover import mcutils
from matchcover.mcmatching import (Matching, max_matching_bipartite, scipy_bipartite_matching_size, max_matching_general,
                                   max_matching_general_task, matching_size, greedy_stream_matching, hall_deficiency,
                                   exhaustive_matching_size, enumerate_matchings, edge_matching_ratio)
from matchcover.mcexceptions import MCException


ORACLE_GRAPHS = 200


def test_matching_type(K3):
    m = Matching([(0, 1)])
    assert len(m) == 1
    assert m.mate(1) == 0
    assert (1, 0) in m
    with pytest.raises(MCException):
        m.add(1, 2)
    assert m.is_valid(K3)
    m.validate(K3)

    assert m.remove(1, 0)
    assert not m.remove(1, 0)
    assert len(m) == 0

    bad = Matching([(0, 4)])
    with pytest.raises(MCException):
        bad.validate(K3)


def test_general_matching_named_graphs(K3, C5, PETERSEN, PM8):
    assert matching_size(K3) == 1
    assert matching_size(C5) == 2
    # the Petersen graph has a perfect matching
    assert matching_size(PETERSEN) == 5
    assert matching_size(PM8) == 4
    assert matching_size(Graph(6)) == 0


def test_general_matching_against_oracles(graph_helper):
    start = time.time()
    corpus = graph_helper.random_corpus(ORACLE_GRAPHS, 10, seed=2024)
    for g in corpus:
        m = max_matching_general(g)
        m.validate(g)
        assert len(m) == exhaustive_matching_size(g)
        assert len(m) == graph_helper.nx_matching_size(g)
    assert time.time() - start < 10.0


def test_general_matching_larger_against_networkx(graph_helper):
    for seed in range(5):
        g = mcgenerators.gnp(40, 0.1, seed=seed)
        assert matching_size(g) == graph_helper.nx_matching_size(g)


def test_warm_start(PETERSEN):
    start = Matching([(0, 1)])
    m = max_matching_general(PETERSEN, initial=start)
    assert len(m) == 5

    # edges outside the graph are skipped
    m = max_matching_general(Graph(4, edges=[(0, 1), (2, 3)]), initial=[(0, 2)])
    assert len(m) == 2


def test_task_units_are_positive(PETERSEN):
    result, units = mcutils.run_task(max_matching_general_task(PETERSEN))
    assert len(result) == 5
    assert units > 0


def test_search_from_given_roots():
    g = Graph(6, edges=[(0, 1), (1, 2), (3, 4)])
    # 2 cannot improve the warm start, 3 can; 5 is isolated
    m, units = mcutils.run_task(max_matching_general_task(g, initial=[(0, 1)], roots=[2, 5]))
    assert m.edges() == [(0, 1)]
    assert units > 0
    m, _ = mcutils.run_task(max_matching_general_task(g, initial=[(0, 1)], roots=[5, 3]))
    assert m.edges() == [(0, 1), (3, 4)]
    m, units = mcutils.run_task(max_matching_general_task(g, initial=[(0, 1)], roots=[]))
    assert (m.edges(), units) == ([(0, 1)], 0)


def test_bounded_depth_guarantee(graph_helper):
    # without augmenting paths of length <= 2d - 1 the size is at least d/(d+1) of optimum
    for g in graph_helper.random_corpus(60, 12, seed=7):
        mu = exhaustive_matching_size(g)
        for depth in (1, 2):
            m, _ = mcutils.run_task(max_matching_general_task(g, max_depth=depth))
            m.validate(g)
            assert len(m) >= depth / (depth + 1.0) * mu - 1e-9


def test_bipartite_hopcroft_karp(graph_helper):
    rng = np.random.default_rng(3)
    for trial in range(40):
        g = mcgenerators.gnp(14, 0.3, seed=trial)
        perm = rng.permutation(14)
        left = sorted(int(x) for x in perm[:6])
        right = sorted(int(x) for x in perm[6:])
        m = max_matching_bipartite(g, left, right)
        m.validate(g)
        for (u, v) in m:
            assert (u in left) != (v in left)
        assert len(m) == scipy_bipartite_matching_size(g, left, right)
        assert len(m) == graph_helper.bipartite_mu(g, left, right)


def test_bipartite_phase_cap():
    g = mcgenerators.complete_bipartite(6, 6)
    left = list(range(6))
    right = list(range(6, 12))
    assert len(max_matching_bipartite(g, left, right)) == 6
    for phases in (1, 2, 3):
        m = max_matching_bipartite(g, left, right, max_phases=phases)
        assert len(m) >= phases / (phases + 1.0) * 6

    with pytest.raises(MCException):
        max_matching_bipartite(g, [0, 1], [1, 2])


def test_bipartite_initial_matching():
    g = mcgenerators.path(4)
    m = max_matching_bipartite(g, [0, 2], [1, 3], initial=Matching([(1, 2)]))
    assert len(m) == 2


def test_greedy_is_maximal(graph_helper):
    for g in graph_helper.random_corpus(30, 12, seed=11):
        m = greedy_stream_matching(g.edges())
        assert graph_helper.is_matching(m.edges())
        assert 2 * len(m) >= exhaustive_matching_size(g)
        for (u, v) in g.edges():
            assert m.is_matched(u) or m.is_matched(v)


def test_hall_deficiency():
    star = mcgenerators.star(5)
    # centre 0 on the right, four leaves on the left: only one can be matched
    assert hall_deficiency(star, [1, 2, 3, 4], [0]) == 3

    pm = mcgenerators.perfect_matching(6)
    assert hall_deficiency(pm, [0, 2, 4], [1, 3, 5]) == 0
    assert hall_deficiency(pm, [0, 2], [1, 3, 5]) == 1


def test_exhaustive_limit():
    with pytest.raises(MCException):
        exhaustive_matching_size(mcgenerators.complete(22))


def test_enumerate_matchings(K3):
    all_matchings = list(enumerate_matchings(K3.edges()))
    # the empty matching plus the three single edges
    assert len(all_matchings) == 4
    c4 = mcgenerators.cycle(4)
    perfect = list(enumerate_matchings(c4.edges(), min_size=2))
    assert len(perfect) == 2


def test_edge_matching_ratio(graph_helper):
    for g in graph_helper.random_corpus(30, 12, seed=13):
        assert edge_matching_ratio(g) <= 1.0
    assert edge_matching_ratio(Graph(4)) == 0.0
