"""
Unit and regression test for the mcstream module.
"""
import pytest
from matchcover import mcgenerators
from matchcover import configs
from matchcover.mcgraph import Graph
from matchcover.mccover import CoverParams, verify_matching_cover
from matchcover.mcmatching import matching_size, max_matching_general
from matchcover.mcstream import (SinglePassStream, as_stream, identity_cover, brute_cover, RegularityCoverFn, BufferCascade,
                                 cascade_feed, cascade_finalize, SparsifierMap, vertex_sparsify, RegularityStreamMatcher,
                                 OptGuessStreamMatcher, stream_match_regularity, stream_match_optguess, stream_match_cascade,
                                 stream_match_greedy)
from matchcover.mcexceptions import MCException, SinglePassException, CascadeOverflowException


def test_stream_is_single_pass(C5):
    stream = SinglePassStream.from_graph(C5)
    assert stream.m == 5
    assert list(stream) == C5.edge_list()
    assert stream.arrivals == 5
    assert stream.consumed
    with pytest.raises(SinglePassException):
        iter(stream)


def test_stream_orders(PETERSEN):
    encoded = list(SinglePassStream.from_graph(PETERSEN))
    reversed_ = list(SinglePassStream.from_graph(PETERSEN, order='reversed'))
    shuffled = list(SinglePassStream.from_graph(PETERSEN, order='random', seed=3))
    assert reversed_ == encoded[::-1]
    assert sorted(shuffled) == encoded
    assert shuffled == list(SinglePassStream.from_graph(PETERSEN, order='random', seed=3))
    with pytest.raises(MCException):
        SinglePassStream.from_graph(PETERSEN, order='sideways')


def test_stream_from_file(SMALL_GRAPH):
    stream = SinglePassStream.from_edge_list(SMALL_GRAPH)
    assert (stream.n, stream.m) == (6, 7)
    assert len(list(stream)) == 7

    assert as_stream(stream) is stream
    assert as_stream([(0, 1)], n=2).n == 2


def test_cascade_identity_keeps_everything():
    for seed in range(4):
        g = mcgenerators.gnp(10, 0.5, seed=seed)
        cascade = BufferCascade(10, g.m, 4, 0.5, identity_cover, seed=seed)
        assert cascade.t_levels == 4
        assert cascade.mc_bound == max(1, g.m)
        for (u, v) in SinglePassStream.from_graph(g, order='random', seed=seed):
            cascade_feed(cascade, (u, v))

        assert cascade_finalize(cascade) == g.edge_set()
        assert cascade.flush_counts[0] <= 4
        assert sum(cascade.flush_counts[1:]) == 0
        assert cascade.peak_bits >= cascade.space_meter
        stats = cascade.stats()
        assert stats['flush_counts'] == cascade.flush_counts


def test_cascade_brute_cover_is_a_cover():
    g = mcgenerators.gnp(10, 0.4, seed=6)
    alpha = 0.4
    cascade = BufferCascade(10, g.m, 2, alpha, brute_cover, seed=1)
    assert cascade.b1_capacity <= 20
    for (u, v) in SinglePassStream.from_graph(g):
        cascade.feed(u, v)
    cover = cascade.finalize()

    assert cover <= g.edge_set()
    assert cascade.flush_counts[0] <= 2
    assert cascade.bound_violations == 0
    # every B_1 flush loses at most alpha/4 * n, and B_1 flushes at most twice
    assert verify_matching_cover(g, cover, alpha / 2.0)


def test_cascade_overflow_with_bad_bound():
    g = mcgenerators.gnp(10, 0.5, seed=0)
    cascade = BufferCascade(10, 20, 2, 0.5, identity_cover, mc_bound=1)
    with pytest.raises(CascadeOverflowException):
        for (u, v) in g.edges():
            cascade.feed(u, v)


def test_cascade_validation():
    with pytest.raises(MCException):
        BufferCascade(5, 10, 0, 0.5, identity_cover)
    with pytest.raises(MCException):
        BufferCascade(5, 10, 2, 1.5, identity_cover)
    cascade = BufferCascade(5, 10, 2, 0.5, identity_cover)
    with pytest.raises(MCException):
        cascade.feed(0, 5)


def test_cascade_feed_swaps_cover_function():
    cascade = BufferCascade(6, 4, 2, 0.5, identity_cover)
    cascade_feed(cascade, (0, 1))
    cascade_feed(cascade, (2, 3), cover_fn=lambda g, alpha: [])
    # B_1 flushed through the replacement, which keeps nothing
    assert cascade.flush_counts[0] == 1
    assert cascade_finalize(cascade) == frozenset()


def test_sparsifier_map(PM8):
    h = SparsifierMap.for_opt(8, 4, 0.5, seed=2)
    assert h.range == 64
    assert h(3) == SparsifierMap.for_opt(8, 4, 0.5, seed=2)(3)
    assert 0 <= h(0) < 64

    single = SparsifierMap(4, 1)
    assert single.contract(0, 3) is None

    out = vertex_sparsify(PM8, 4, 0.5, seed=2)
    assert out.n == 64
    assert out.multi
    assert out.m <= PM8.m

    with pytest.raises(MCException):
        SparsifierMap.for_opt(8, 0, 0.5)
    with pytest.raises(MCException):
        vertex_sparsify([(0, 1)], 1, 0.5)


def test_greedy_and_cascade_matchers(graph_helper):
    g = mcgenerators.gnp(14, 0.3, seed=8)
    greedy = stream_match_greedy(g)
    greedy.validate(g)
    assert 2 * len(greedy) >= matching_size(g)

    m, cascade = stream_match_cascade(g, 14, 4, 0.5, identity_cover)
    m.validate(g)
    assert len(m) == graph_helper.nx_matching_size(g)


def test_regularity_matcher_stores_small_streams(graph_helper):
    g = mcgenerators.gnp(12, 0.5, seed=2)
    m = stream_match_regularity(g, 12, 4, seed=1)
    m.validate(g)
    assert len(m) == graph_helper.nx_matching_size(g)


def test_regularity_matcher_after_store_overflow(graph_helper):
    g = mcgenerators.gnp(24, 0.5, seed=5)
    params = CoverParams(t=2, gamma=0.25, p_sample=1.0, good_density_threshold=0.3, overflow='stop', workers=1, seed=4)
    matcher = RegularityStreamMatcher(24, 16, params=params, m=g.m, seed=4)
    m = matcher.run(SinglePassStream.from_graph(g))
    m.validate(g)
    assert not matcher.stored_everything
    # nothing is sampled away, so the cascade keeps every edge
    assert len(m) == graph_helper.nx_matching_size(g)

    report = matcher.report
    assert report['arrivals'] == g.m
    assert report['stored'] is False
    assert report['peak_bits'] >= report['cascade_peak_bits']


def test_regularity_cover_fn_small_buffers_are_kept():
    fn = RegularityCoverFn(CoverParams(t=4, gamma=0.2, workers=1))
    g = mcgenerators.gnp(10, 0.5, seed=1)
    assert fn(g, 0.1) == g.edges()
    assert fn.mc_bound(10, 30, 0.1, 8) == 30


def test_optguess_matcher(graph_helper):
    g = mcgenerators.gnp(16, 0.6, seed=3)
    mu = graph_helper.nx_matching_size(g)

    # everything fits in the stored prefix
    m = stream_match_optguess(g, 16, 2, 0.5, seed=1)
    m.validate(g)
    assert len(m) == mu

    for epsilon in (0.5, 0.25):
        m = stream_match_optguess(SinglePassStream.from_graph(g, order='random', seed=2), 16, 4, epsilon, seed=1)
        m.validate(g)
        assert len(m) >= (1 - epsilon) * mu

    with pytest.raises(MCException):
        stream_match_optguess(g, 16, 1, 0.5)


def test_matchers_refuse_second_pass(C5):
    stream = SinglePassStream.from_graph(C5)
    stream_match_greedy(stream)
    with pytest.raises(SinglePassException):
        stream_match_cascade(stream, 5, 2, 0.5, identity_cover)


def _assert_flush_bounds(cascade):
    for level, count in enumerate(cascade.flush_counts):
        assert count <= cascade.k / 2.0 ** level + configs.FLOAT_TOL
    assert cascade.flush_counts[-1] == 0


def _compressing_params(seed):
    # four classes keep about a quarter of the edges inside classes; good pairs keep 5%
    return CoverParams(t=4, gamma=0.25, good_density_threshold=0.05, p_sample=0.05, overflow='stop', workers=1, seed=seed)


def _matching_only_cover(g, alpha):
    return max_matching_general(g).edges()


def test_cascade_flush_bounds_on_random_streams():
    for seed in range(50):
        # alpha / 2k * n is one edge in every case, so the brute cover really searches
        k, alpha = ((2, 0.4), (3, 0.6), (4, 0.8))[seed % 3]
        g = mcgenerators.gnp(10, 0.3 + 0.1 * (seed % 2), seed=seed)
        cascade = BufferCascade(10, g.m, k, alpha, brute_cover, seed=seed)
        for edge in SinglePassStream.from_graph(g, order='random', seed=seed):
            cascade_feed(cascade, edge)
            _assert_flush_bounds(cascade)

        cover = cascade_finalize(cascade)
        assert cover <= g.edge_set()
        assert verify_matching_cover(g, cover, alpha / 2.0)


@pytest.mark.parametrize('seed', range(10))
def test_regularity_cascade_flush_bounds_at_scale(seed):
    g = mcgenerators.gnp(512, 0.6, seed=seed)
    cascade = BufferCascade(512, g.m, 5, 0.5, RegularityCoverFn(_compressing_params(seed)), seed=seed)
    assert cascade.mc_bound < g.m / 4
    for edge in SinglePassStream.from_graph(g, order='random', seed=seed):
        cascade_feed(cascade, edge)
        _assert_flush_bounds(cascade)

    # four or five covers of B_1 reach B_2, which holds three
    assert cascade.flush_counts[0] >= 4
    assert cascade.flush_counts[1] == 1
    assert cascade.bound_violations == 0
    assert len(cascade_finalize(cascade)) < g.m / 2


@pytest.mark.parametrize('seed', range(20))
def test_regularity_matcher_answers_from_cover(seed):
    n = 256
    g = mcgenerators.gnp(n, 0.9, seed=seed)
    mu = matching_size(g)
    arrivals = list(SinglePassStream.from_graph(g, order='random', seed=seed))
    for edges in (arrivals, arrivals[::-1]):
        matcher = RegularityStreamMatcher(n, 4, params=_compressing_params(seed), m=g.m, seed=seed, store_capacity=0)
        m = matcher.run(SinglePassStream(edges, n=n, m=g.m))
        m.validate(g)
        assert not matcher.stored_everything
        assert matcher.cascade.flush_counts[0] >= 3
        assert len(m) >= mu - matcher.alpha * n
        assert len(m) >= 0.9 * mu


def test_regularity_matcher_space_against_naive_encoding():
    n = 512
    g = mcgenerators.gnp(n, 0.6, seed=1)
    matcher = RegularityStreamMatcher(n, 4, params=_compressing_params(1), m=g.m, seed=1)
    for (u, v) in SinglePassStream.from_graph(g, order='random', seed=1):
        matcher.feed(u, v)

    report = matcher.report
    assert report['naive_bits'] == configs.NAIVE_BITS_PER_EDGE * g.m
    assert report['cascade_peak_bits'] <= 0.5 * report['naive_bits']
    assert report['peak_bits'] <= 0.5 * report['naive_bits']


def test_vertex_sparsify_rarely_loses_half():
    theta = 0.5
    for g in (mcgenerators.perfect_matching(40), mcgenerators.complete_bipartite(20, 30), mcgenerators.complete(41)):
        assert matching_size(g) == 20
        failures = 0
        for seed in range(200):
            h = vertex_sparsify(g, 20, theta, seed=seed)
            if matching_size(h.simple()) < (1 - theta) * 20:
                failures += 1
        assert failures <= 0.05 * 200


def test_optguess_matcher_from_branches(graph_helper):
    g = mcgenerators.gnp(24, 0.5, seed=6)
    mu = graph_helper.nx_matching_size(g)
    matcher = OptGuessStreamMatcher(24, 8, 0.5, m=g.m, seed=3)
    m = matcher.run(SinglePassStream.from_graph(g, order='random', seed=4))
    m.validate(g)
    assert not matcher.report['stored']
    assert matcher.report['branches'] == 3
    assert len(m) >= 0.5 * mu


def test_optguess_keeps_preimages_of_buffered_edges(graph_helper):
    g = mcgenerators.gnp(40, 0.3, seed=11)
    matcher = OptGuessStreamMatcher(40, 4, 0.5, cover_fn=_matching_only_cover, m=g.m, seed=2)
    for (u, v) in SinglePassStream.from_graph(g, order='random', seed=5):
        matcher.feed(u, v)
        for branch in matcher.branches:
            held = set()
            for level in range(branch.cascade.t_levels):
                held.update(branch.cascade.buffer_contents(level))
            assert set(branch.preimages) <= held

    report = matcher.report
    assert all(counts[0] >= 3 for counts in report['flush_counts'])
    assert all(pruned > 0 for pruned in report['pruned_preimages'])
    assert report['preimages'] == [len(b.preimages) for b in matcher.branches]
    assert report['peak_bits'] >= sum(b.preimage_bits for b in matcher.branches)
    for branch in matcher.branches:
        assert branch.peak_bits >= branch.preimage_bits
        branch.projected_matching().validate(g)

    m = matcher.finish()
    m.validate(g)
    assert len(m) == graph_helper.nx_matching_size(g)
