"""
Unit and regression test for the mcdict module.
"""
import math
import pytest
import numpy as np
from matchcover.mcdict import CompactEdgeDict
from matchcover.mcexceptions import MCException, CapacityException


def test_add_contains_discard():
    d = CompactEdgeDict(20, 10, seed=1)
    assert d.add(3, 7)
    assert not d.add(7, 3)
    assert (3, 7) in d
    assert d.contains(7, 3)
    assert not d.contains(3, 3)
    assert len(d) == 1

    assert d.discard(3, 7)
    assert not d.discard(3, 7)
    assert len(d) == 0
    assert (3, 7) not in d


def test_capacity_enforced():
    d = CompactEdgeDict(10, 3, seed=0)
    d.add(0, 1)
    d.add(0, 2)
    d.add(0, 3)
    assert d.full
    # re-adding a present pair is fine when full
    assert not d.add(0, 1)
    with pytest.raises(CapacityException):
        d.add(0, 4)


def test_edges_round_trip_many_seeds():
    rng = np.random.default_rng(5)
    n = 30
    for seed in range(10):
        d = CompactEdgeDict(n, 50, seed=seed)
        pairs = set()
        while len(pairs) < 50:
            u, v = sorted(int(x) for x in rng.choice(n, size=2, replace=False))
            pairs.add((u, v))
        for (u, v) in pairs:
            d.add(u, v)
        assert d.edges() == sorted(pairs)


def test_bits_accounting():
    n = 64
    capacity = 40
    d = CompactEdgeDict(n, capacity, seed=3)
    assert d.bits_used == d.num_buckets

    for i in range(capacity):
        d.add(i, i + 1)
    assert d.bits_used == capacity * d.quotient_width + capacity + d.num_buckets
    assert d.bits_used <= d.bits_bound()

    universe = n * (n - 1) // 2
    assert d.bits_bound() == pytest.approx(capacity * math.log2(universe / capacity) + 3 * capacity)


def test_pack_unpack():
    d = CompactEdgeDict(16, 12, seed=11)
    for (u, v) in [(0, 1), (2, 9), (3, 15), (4, 5), (10, 14)]:
        d.add(u, v)
    bits = d.pack()
    assert len(bits) == d.bits_used
    assert set(np.unique(bits)) <= {0, 1}

    twin = CompactEdgeDict(16, 12, seed=11)
    assert twin.unpack(bits) == d.edges()

    with pytest.raises(MCException):
        twin.unpack(np.concatenate([bits, [1]]))


def test_small_universe():
    # universe of 3 pairs, capacity larger than the universe
    d = CompactEdgeDict(3, 10, seed=2)
    for (u, v) in [(0, 1), (0, 2), (1, 2)]:
        d.add(u, v)
    assert d.edges() == [(0, 1), (0, 2), (1, 2)]
    assert d.bits_used <= d.bits_bound()
    assert d.unpack(d.pack()) == d.edges()


def test_bad_construction():
    with pytest.raises(MCException):
        CompactEdgeDict(10, 0)
    with pytest.raises(MCException):
        CompactEdgeDict(-1, 4)


def test_clear():
    d = CompactEdgeDict(8, 4, seed=0)
    d.add(1, 2)
    d.clear()
    assert len(d) == 0
    assert d.edges() == []
