##                  _       _
##  _ __ ___   __ _| |_ ___| |__   ___ _____   _____ _ __
## | '_ ` _ \ / _` | __/ __| '_ \ / __/ _ \ \ / / _ \ '__|
## | | | | | | (_| | || (__| | | | (_| (_) \ V /  __/ |
## |_| |_| |_|\__,_|\__\___|_| |_|\___\___/ \_/ \___|_|
##
## Matching covers, streaming and fully dynamic matching
## Copyright 2024 - 2026
##

"""
mcdict implements CompactEdgeDict, a set of vertex pairs stored by quotienting.

Every pair is first encoded as an integer x in [0, u) with u = n(n-1)/2, then
scrambled by a seeded affine bijection y = (a*x + c) mod u. The low part
y mod B picks one of B buckets and only the quotient y // B is stored, so
each element costs ceil(log2(u/B)) bits plus one occupancy bit, and each
bucket costs one terminator bit. With B = capacity this gives

    bits_used <= s * log2(u/s) + 3s        (s = capacity)

which is the bound reported by ``bits_bound``.

"""

import math

import numpy as np

from .mcexceptions import MCException, CapacityException
from .mcgraph import encode_pair, decode_pair
from . import mcutils


class CompactEdgeDict:
    """
    Set of vertex pairs over [0, n) holding at most ``capacity`` elements,
    with exact bit accounting.

    """

    def __init__(self, n, capacity, seed=None):
        """
        Parameters
        -----------
        n : int
            Number of vertices; the universe is every unordered pair

        capacity : int
            Maximum number of stored pairs (s)

        seed : int or np.random.Generator
            Seed for the scrambling bijection

        """
        if n < 0:
            raise MCException('Number of vertices must be non-negative, got %i' % (n))
        if capacity < 1:
            raise MCException('CompactEdgeDict capacity must be at least 1, got %i' % (capacity))

        self.__n = int(n)
        self.__capacity = int(capacity)
        self.__universe = mcutils.choose2(self.__n)
        self.__num_buckets = max(1, min(self.__capacity, self.__universe))

        if self.__universe > 1:
            self.__width = ((self.__universe - 1) // self.__num_buckets).bit_length()
        else:
            self.__width = 0

        rng = mcutils.make_rng(seed)
        self.__a, self.__c, self.__a_inv = self.__draw_bijection(rng)

        self.__buckets = {}
        self.__size = 0

    # ........................................................................
    #
    def __draw_bijection(self, rng):
        u = self.__universe
        if u <= 1:
            return 1, 0, 1
        while True:
            a = int(rng.integers(1, u))
            if math.gcd(a, u) == 1:
                break
        c = int(rng.integers(0, u))
        return a, c, pow(a, -1, u)

    # ........................................................................
    #
    def __locate(self, u, v):
        x = encode_pair(u, v, self.__n)
        y = (self.__a * x + self.__c) % self.__universe
        return y % self.__num_buckets, y // self.__num_buckets

    def __restore(self, bucket, quotient):
        y = quotient * self.__num_buckets + bucket
        x = ((y - self.__c) * self.__a_inv) % self.__universe
        return decode_pair(x, self.__n)

    # ........................................................................
    #
    @property
    def n(self):
        return self.__n

    @property
    def capacity(self):
        return self.__capacity

    @property
    def universe_size(self):
        return self.__universe

    @property
    def num_buckets(self):
        return self.__num_buckets

    @property
    def quotient_width(self):
        return self.__width

    # ........................................................................
    #
    def add(self, u, v):
        """
        Inserts the pair (u, v).

        Returns
        --------
        bool
            True if the pair was new, False if it was already stored

        Raises
        --------
        CapacityException
            If the pair is new and the dictionary is full

        """
        bucket, quotient = self.__locate(u, v)
        slot = self.__buckets.get(bucket)
        if slot is not None and quotient in slot:
            return False
        if self.__size >= self.__capacity:
            raise CapacityException('CompactEdgeDict is full (capacity %i)' % (self.__capacity))
        if slot is None:
            slot = set()
            self.__buckets[bucket] = slot
        slot.add(quotient)
        self.__size += 1
        return True

    # ........................................................................
    #
    def contains(self, u, v):
        if u == v:
            return False
        bucket, quotient = self.__locate(u, v)
        slot = self.__buckets.get(bucket)
        return slot is not None and quotient in slot

    def __contains__(self, edge):
        return self.contains(edge[0], edge[1])

    # ........................................................................
    #
    def discard(self, u, v):
        bucket, quotient = self.__locate(u, v)
        slot = self.__buckets.get(bucket)
        if slot is None or quotient not in slot:
            return False
        slot.remove(quotient)
        if not slot:
            del self.__buckets[bucket]
        self.__size -= 1
        return True

    def clear(self):
        self.__buckets = {}
        self.__size = 0

    def __len__(self):
        return self.__size

    @property
    def full(self):
        return self.__size >= self.__capacity

    # ........................................................................
    #
    def edges(self):
        """
        Stored pairs as a sorted list of (u, v), u < v.

        """
        out = []
        for bucket, slot in self.__buckets.items():
            for quotient in slot:
                out.append(self.__restore(bucket, quotient))
        out.sort()
        return out

    # ........................................................................
    #
    @property
    def bits_used(self):
        """
        Exact size in bits of the packed representation: fixed-width quotients,
        one unary occupancy bit per element and one terminator per bucket.

        """
        return self.__size * self.__width + self.__size + self.__num_buckets

    def bits_bound(self):
        """
        Documented bound s*log2(u/s) + 3s (constant c = 1).

        """
        s = self.__capacity
        if self.__universe <= s:
            return 3 * s
        return s * math.log2(self.__universe / s) + 3 * s

    # ........................................................................
    #
    def pack(self):
        """
        Returns the packed bit string.

        Layout: for every bucket in order, one 1 per stored element followed by
        a 0; then every quotient (bucket order, ascending within a bucket) in
        ``quotient_width`` bits, most significant first.

        Returns
        --------
        np.ndarray
            uint8 array of 0/1 values with length ``bits_used``

        """
        counts = np.zeros(self.__num_buckets, dtype=np.int64)
        quotients = []
        for bucket in sorted(self.__buckets):
            slot = sorted(self.__buckets[bucket])
            counts[bucket] = len(slot)
            quotients.extend(slot)

        occupancy = np.ones(self.__size + self.__num_buckets, dtype=np.uint8)
        terminators = np.cumsum(counts + 1) - 1
        occupancy[terminators] = 0

        if self.__width == 0 or self.__size == 0:
            return occupancy

        q = np.array(quotients, dtype=np.int64)
        shifts = np.arange(self.__width - 1, -1, -1, dtype=np.int64)
        qbits = ((q[:, None] >> shifts[None, :]) & 1).astype(np.uint8).ravel()
        return np.concatenate([occupancy, qbits])

    # ........................................................................
    #
    def unpack(self, bits):
        """
        Decodes a bit string produced by ``pack`` on a dictionary with the same
        n, capacity and seed.

        Returns
        --------
        list of (int, int)
            Sorted pairs

        """
        bits = np.asarray(bits, dtype=np.int64)
        counts = []
        run = 0
        position = 0
        while len(counts) < self.__num_buckets:
            if position >= len(bits):
                raise MCException('Bit string ended inside the occupancy section')
            if bits[position] == 1:
                run += 1
            else:
                counts.append(run)
                run = 0
            position += 1

        out = []
        for bucket, count in enumerate(counts):
            for _ in range(count):
                if self.__width == 0:
                    quotient = 0
                else:
                    chunk = bits[position:position + self.__width]
                    quotient = int(chunk.dot(1 << np.arange(self.__width - 1, -1, -1, dtype=np.int64)))
                    position += self.__width
                out.append(self.__restore(bucket, quotient))

        if position != len(bits):
            raise MCException('Bit string has %i trailing bits' % (len(bits) - position))
        out.sort()
        return out

    def __repr__(self):
        return "[" + hex(id(self)) + "]: COMPACT EDGE DICT (%i/%i pairs, %i bits)" % (self.__size, self.__capacity, self.bits_used)
