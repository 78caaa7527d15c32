"""
Unit and regression test for the mcregularity module.
"""
import pytest
import numpy as np
from fractions import Fraction
from matchcover.mcgraph import Graph
from matchcover import mcgenerators
from matchcover.mcregularity import (Partition, initial_partition, density, certificate_level, regularity_check,
                                     refine, partition_index, regular_partition, PairStatus)
from matchcover.mcexceptions import MCException, RefinementOverflowException


def _half_block_graph():
    # X = {0..3} joined to Y = {8..11}; classes A = {0..7}, B = {8..15}
    g = Graph(16)
    for u in range(4):
        for v in range(8, 12):
            g.insert_edge(u, v)
    return g


def test_initial_partition():
    part = initial_partition(22, 4, 0.2, seed=1)
    assert part.k == 4
    assert part.class_size == 5
    assert len(part.exceptional) == 2
    assert sorted(v for c in part.classes for v in c) == list(range(22))
    assert part == initial_partition(22, 4, 0.2, seed=1)

    with pytest.raises(MCException):
        initial_partition(10, 4, 0.2)


def test_partition_validation():
    with pytest.raises(MCException):
        Partition([[], [0, 1], [1, 2]], 3, 0.5)
    with pytest.raises(MCException):
        Partition([[], [0, 1], [2]], 3, 0.5)
    with pytest.raises(RefinementOverflowException):
        Partition([[0, 1, 2], [3, 4]], 5, 0.2)
    with pytest.raises(MCException):
        Partition([[], [0, 1]], 2, 0.2, t_min=2)

    part = Partition([[4], [0, 1], [2, 3]], 5, 0.2, t_min=2)
    assert list(part.labels()) == [1, 1, 2, 2, 0]
    assert part.pairs() == [(1, 2)]
    assert part.to_lines() == ['class 0: 4', 'class 1: 0 1', 'class 2: 2 3']


def test_density(C5):
    assert density(C5, [0], [1, 2]) == Fraction(1, 2)
    assert density(C5, [0, 2], [1, 3]) == Fraction(3, 4)
    with pytest.raises(MCException):
        density(C5, [0, 1], [1])
    with pytest.raises(MCException):
        density(C5, [], [1])


def test_regular_pair_exact():
    g = mcgenerators.complete_bipartite(8, 8)
    status = regularity_check(g, range(8), range(8, 16), 0.25, i=1, j=2)
    assert status.regular
    assert status.method == 'exact'
    assert status.density == 1


def test_irregular_pair_has_valid_witness():
    g = _half_block_graph()
    gamma = 0.25
    status = regularity_check(g, range(8), range(8, 16), gamma, i=1, j=2)
    assert not status.regular
    x, y = status.witness
    assert x <= set(range(8))
    assert y <= set(range(8, 16))

    level = certificate_level(gamma)
    assert len(x) >= level * 8
    assert len(y) >= level * 8
    assert abs(float(density(g, x, y)) - float(status.density)) >= level


def test_sparse_large_pair_is_regular():
    # classes above the exact limit with density below gamma^3
    g = Graph(40)
    g.insert_edge(0, 20)
    status = regularity_check(g, range(20), range(20, 40), 0.3)
    assert status.regular
    assert status.method == 'sparse'


def test_approximate_witness_on_large_pair():
    # half of B is complete to A, the other half is empty
    g = Graph(40)
    for u in range(20):
        for v in range(20, 30):
            g.insert_edge(u, v)
    gamma = 0.25
    status = regularity_check(g, range(20), range(20, 40), gamma)
    assert not status.regular
    assert status.method in ('degree', 'codegree')
    x, y = status.witness
    assert abs(float(density(g, x, y)) - 0.5) >= certificate_level(gamma)


def test_refine_splits_along_witness():
    g = _half_block_graph()
    part = Partition([[], list(range(8)), list(range(8, 16))], 16, 0.25)
    status = regularity_check(g, part[1], part[2], 0.25, i=1, j=2)
    refined = refine(g, part, [status])
    assert refined.k >= part.k
    for c in refined.classes[1:]:
        assert c <= part[1] or c <= part[2]
    assert partition_index(g, refined) >= partition_index(g, part) - 1e-12

    with pytest.raises(MCException):
        refine(g, part, [PairStatus(1, 2, Fraction(0), True)])


def test_partition_index_bounds(PETERSEN):
    part = Partition([[], [0, 1, 2, 3, 4], [5, 6, 7, 8, 9]], 10, 0.2)
    q = partition_index(PETERSEN, part)
    assert 0.0 <= q <= 1.0

    # C0 counts as singletons, so moving vertices there never lowers the index
    finer = Partition([[0, 5], [1, 2, 3, 4], [6, 7, 8, 9]], 10, 0.2)
    assert partition_index(PETERSEN, finer) >= q - 1e-12


@pytest.mark.parametrize('gamma', [0.1, 0.25])
def test_planted_partition_is_regular(gamma):
    g, planted = mcgenerators.planted_partition(4, 6, gamma)
    result = regular_partition(g, t=4, gamma=gamma, initial=planted)
    assert result.status == 'regular'
    assert result.rounds == 0
    assert result.partition == planted
    assert all(s.regular for s in result.statuses)


def test_index_non_decreasing():
    for seed in range(4):
        g = Graph(48)
        # two dense blocks hidden under a random labelling
        rng = np.random.default_rng(seed)
        perm = rng.permutation(48)
        left = perm[:24]
        right = perm[24:]
        for block in (left, right):
            for a in range(len(block)):
                for b in range(a + 1, len(block)):
                    if rng.random() < 0.9:
                        g.insert_edge(int(block[a]), int(block[b]))
        result = regular_partition(g, t=2, gamma=0.25, seed=seed, overflow='stop', max_rounds=6)
        assert result.status in ('regular', 'round-cap', 'overflow')
        history = result.index_history
        assert len(history) == result.rounds + 1
        for before, after in zip(history, history[1:]):
            assert after >= before - 1e-9


def test_result_frame():
    g, planted = mcgenerators.planted_partition(3, 5, 0.2)
    result = regular_partition(g, t=3, gamma=0.2, initial=planted)
    frame = result.to_frame()
    assert list(frame.columns) == ['i', 'j', 'density', 'regular', 'witness_x', 'witness_y', 'gap', 'method']
    assert len(frame) == 3
    assert result.status_of(2, 1).regular
    with pytest.raises(MCException):
        result.status_of(1, 9)


def test_workers_do_not_change_result():
    g = mcgenerators.gnp(40, 0.5, seed=3)
    serial = regular_partition(g, t=4, gamma=0.2, seed=1, workers=1, overflow='stop', max_rounds=2)
    threaded = regular_partition(g, t=4, gamma=0.2, seed=1, workers=3, overflow='stop', max_rounds=2)
    assert serial.partition == threaded.partition
    assert [s.regular for s in serial.statuses] == [s.regular for s in threaded.statuses]
