"""
Unit and regression test for the mccover module.
"""
import math
import itertools
import pytest
import numpy as np
from matchcover import mcgenerators
from matchcover.mcgraph import Graph
from matchcover.mccover import (CoverParams, build_cover, cover_frame, default_alpha, cover_size_bound, FractionalMatching,
                                consolidate, consolidation_floor, verify_hitting_set, verify_matching_cover,
                                brute_force_optimal_cover, lift_cover_via_double_cover, verify_rs_partition)
from matchcover.mcexceptions import MCException


def _params(**kwargs):
    values = {'t': 2, 'gamma': 0.25, 'good_density_threshold': 0.3, 'p_sample': 1.0, 'seed': 1, 'overflow': 'stop', 'workers': 1}
    values.update(kwargs)
    return CoverParams(**values)


def test_default_constants():
    assert default_alpha(0.2) == pytest.approx((0.2 * math.log(5.0)) ** (1.0 / 3.0))
    assert cover_size_bound(10, 0.1, 5) == pytest.approx(101.0)
    with pytest.raises(MCException):
        default_alpha(1.0)


def test_cover_params():
    params = CoverParams(gamma=0.2)
    assert params.density_threshold() == pytest.approx(1.6)
    assert params.sample_probability(100) == 1.0
    assert params.sample_probability(2) == 1.0
    assert params.alpha_value() == pytest.approx(default_alpha(0.2))
    assert params.replace(p_sample=0.5).sample_probability(100) == 0.5

    for bad in ({'t': 0}, {'gamma': 1.0}, {'p_sample': 0.0}, {'good_density_threshold': -1}, {'overflow': 'ignore'}, {'alpha': 2.0}):
        with pytest.raises(MCException):
            CoverParams(**bad)


def test_build_cover_too_small():
    with pytest.raises(MCException):
        build_cover(mcgenerators.gnp(5, 0.5, seed=0), CoverParams(t=4, gamma=0.25))


def test_cover_parts_partition_the_edges():
    for seed in range(3):
        g = mcgenerators.gnp(24, 0.5, seed=seed)
        report = build_cover(g, _params(p_sample=0.5, seed=seed))
        F1, F2, F3 = report.F1, report.F2, report.F3
        assert not (F1 & F2) and not (F1 & F3) and not (F2 & F3)
        assert report.F <= g.edge_set()

        labels = report.partition.labels()
        for (u, v) in F2:
            assert labels[u] == labels[v]
        for (u, v) in F1:
            a, b = sorted((int(labels[u]), int(labels[v])))
            assert a != b
            assert report.pair_class[(a, b)] == 'bad'
        for (u, v) in F3:
            a, b = sorted((int(labels[u]), int(labels[v])))
            assert report.pair_class[(a, b)] == 'good'
        assert len(F1) + len(F2) + report.good_edges == g.m

        # pairs touching the exceptional class are never good
        for j in range(1, report.partition.k + 1):
            assert report.pair_class[(0, j)] == 'bad'


def test_cover_is_seeded():
    g = mcgenerators.gnp(20, 0.6, seed=9)
    a = build_cover(g, _params(p_sample=0.4, seed=3))
    b = build_cover(g, _params(p_sample=0.4, seed=3))
    assert a.F == b.F


def test_complete_graph_compresses_good_pair():
    g = mcgenerators.complete(16)
    report = build_cover(g, _params(p_sample=0.3, seed=2))
    assert report.regularity.status == 'regular'
    assert report.good_pairs() == [(1, 2)]
    assert len(report.F1) == 0
    assert len(report.F2) == 2 * 28
    assert report.good_edges == 64
    assert 0 < len(report.F3) < 64

    frame = cover_frame(report)
    assert len(frame) == 1
    assert int(frame['F'][0]) == len(report)
    assert int(frame['good_pairs'][0]) == 1

    pairs = report.pair_frame()
    assert int(pairs.loc[(pairs['i'] == 1) & (pairs['j'] == 2), 'f3_edges'].iloc[0]) == len(report.F3)


def test_full_sampling_keeps_every_edge():
    g = mcgenerators.gnp(12, 0.5, seed=4)
    report = build_cover(g, _params())
    assert report.F == g.edge_set()
    assert verify_matching_cover(g, report.to_graph(), 0.0)
    assert report.check_good_pair_samples(g, samples=10, seed=0)


def test_cover_report_write(tmp_path):
    g = mcgenerators.complete(16)
    report = build_cover(g, _params(p_sample=0.5))
    report.write(str(tmp_path))
    for name in ('partition.txt', 'pairs.csv', 'F1.txt', 'F2.txt', 'F3.txt'):
        assert (tmp_path / name).exists()


def _random_fractional(n, seed):
    rng = np.random.default_rng(seed)
    weights = {}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.4:
                weights[(u, v)] = rng.random() / n
    return FractionalMatching(n, weights)


@pytest.mark.parametrize('epsilon', [0.25, 0.5])
def test_consolidate_properties(epsilon):
    for seed in range(5):
        x = _random_fractional(10, seed)
        y = consolidate(x, epsilon, seed=seed)
        floor = consolidation_floor(epsilon)

        assert np.all(y.vertex_sums() <= x.vertex_sums() + 1e-12)
        assert y.support() <= x.support()
        for w in y.weights.values():
            assert w >= floor
        assert y.total() >= x.total() - 2 * epsilon * x.n_nodes - 1e-9


def test_consolidate_edge_cases():
    assert consolidation_floor(1.0) == math.inf
    x = _random_fractional(6, 0)
    assert consolidate(x, 1.0, seed=0).support() == frozenset()
    assert consolidate(FractionalMatching(4, {}), 0.5).total() == 0.0
    with pytest.raises(MCException):
        consolidate(x, 0.0)


def test_fractional_matching_validation():
    x = FractionalMatching(3, {(1, 0): 0.5})
    assert x[(0, 1)] == 0.5
    assert x[(1, 2)] == 0.0
    with pytest.raises(MCException):
        FractionalMatching(3, {(0, 1): 1.5})
    with pytest.raises(MCException):
        FractionalMatching(3, {(0, 3): 0.5})
    with pytest.raises(MCException):
        FractionalMatching(3, {(0, 1): 0.5, (1, 0): 0.5})


def test_hitting_set(PM8):
    assert verify_hitting_set(PM8, PM8, 0.25)
    verdict = verify_hitting_set(PM8, Graph(8), 0.25)
    assert not verdict
    a, b = verdict.counterexample
    assert len(a) == len(b) == 2
    assert verdict.as_dict()['passed'] is False

    # sides too large to be disjoint
    assert verify_hitting_set(PM8, Graph(8), 0.9).checked == 0

    with pytest.raises(MCException):
        verify_hitting_set(mcgenerators.path(15), Graph(15), 0.2)
    with pytest.raises(MCException):
        verify_hitting_set(PM8, PM8, 1.5)


def test_matching_cover_exhaustive(C5, PETERSEN):
    assert verify_matching_cover(C5, C5, 0.0)
    verdict = verify_matching_cover(C5, Graph(5), 0.0)
    assert not verdict
    p, q, mu_g, mu_h = verdict.counterexample
    assert mu_h == 0 and mu_g == len(p) == len(q)

    # slack of half the vertices passes anything
    assert verify_matching_cover(PETERSEN, Graph(10), 0.5)

    with pytest.raises(MCException):
        verify_matching_cover(mcgenerators.path(13), Graph(13), 0.1)


def test_matching_cover_sampled(PM8):
    assert verify_matching_cover(PM8, PM8, 0.0, mode='sampled', samples=50, seed=1)
    assert not verify_matching_cover(PM8, Graph(8), 0.0, mode='sampled', samples=50, seed=1)

    big = mcgenerators.gnp(40, 0.2, seed=2)
    assert verify_matching_cover(big, big, 0.05, mode='sampled', samples=60, seed=2)


def test_brute_force_cover_is_optimal():
    for g in (mcgenerators.complete(4), mcgenerators.cycle(6), mcgenerators.path(5)):
        alpha = 0.25
        best = brute_force_optimal_cover(g, alpha)
        assert verify_matching_cover(g, best, alpha)
        if best:
            for smaller in itertools.combinations(g.edges(), len(best) - 1):
                assert not verify_matching_cover(g, smaller, alpha)


def test_brute_force_edge_cases(K3):
    # slack below one edge keeps everything
    assert brute_force_optimal_cover(K3, 0.2) == frozenset(K3.edges())
    with pytest.raises(MCException):
        brute_force_optimal_cover(mcgenerators.complete(7), 0.2)


def test_lift_via_double_cover(C5):
    assert lift_cover_via_double_cover(C5, lambda doubled: doubled.edges()) == C5.edge_set()
    assert lift_cover_via_double_cover(C5, lambda doubled: []) == frozenset()
    with pytest.raises(MCException):
        lift_cover_via_double_cover(C5, lambda doubled: [(0, 1)])


def test_rs_partition():
    g, matchings = mcgenerators.rs_layered(4, 3, seed=1)
    assert verify_rs_partition(g, matchings, 4)
    assert not verify_rs_partition(g, matchings[:-1], 4)
    assert not verify_rs_partition(g, matchings, 3)

    c4 = mcgenerators.cycle(4)
    verdict = verify_rs_partition(c4, [[(0, 1), (2, 3)], [(1, 2), (0, 3)]], 2)
    assert not verdict
    assert 'induced' in verdict.counterexample
