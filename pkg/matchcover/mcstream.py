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
mcstream holds the single-pass streaming matchers.

The core is BufferCascade: buffers B_1..B_t, each kept in a CompactEdgeDict.
B_1 collects arriving edges; once it has collected m/k of them it is replaced
by an alpha'-matching cover of its contents (alpha' = alpha / 2k), which is
pushed into B_2. Buffer B_i for i > 1 does the same once it holds
2 * MC edges, where MC bounds the size of any cover the cover function
returns. The union of the buffers at the end of the stream is an
alpha-matching cover of the stream. Flush counts obey k_i <= k / 2^(i-1) and
the top buffer never flushes; both are checked after every flush.

On top of the cascade sit

    stream_match_regularity   stores the first 2n^2/k edges next to a cascade
                              driven by build_cover
    stream_match_optguess     guesses opt = n/4, n/8, ..., sparsifies vertices
                              for each guess and cascades every branch
    stream_match_cascade      the cascade alone, without sparsification

A cover function is any callable ``cover_fn(g, alpha)`` returning edges of g;
it may also provide ``mc_bound(n, m, alpha, b1_capacity)``.

"""

import math

from .mcexceptions import MCException, CascadeOverflowException, ProjectionException, SinglePassException, CapacityException, MCWarning
from .mcgraph import Graph, normalize_edge
from .mcdict import CompactEdgeDict
from .mcmatching import Matching, max_matching_general, greedy_stream_matching
from .mccover import CoverParams, build_cover, brute_force_optimal_cover
from .mcgenerators import gnp
from . import mcfiles
from . import mcio
from . import mcutils
from . import configs


# ........................................................................
#
class SinglePassStream:
    """
    Edge stream that can be iterated exactly once.

    ``n`` and ``m`` are the declared vertex and edge counts when known.
    ``arrivals`` counts the edges handed out so far.

    """

    def __init__(self, source, n=None, m=None):
        self.__source = source
        self.__consumed = False
        self.n = n
        self.m = m
        self.arrivals = 0

    @classmethod
    def from_edge_list(cls, filename):
        items = mcfiles.iter_edge_list(filename)
        n, m, _ = next(items)
        return cls(items, n=n, m=m)

    @classmethod
    def from_graph(cls, g, order='encoded', seed=None):
        """
        Streams the edges of g (parallel copies repeated) in 'encoded',
        'reversed' or 'random' order.

        """
        mcutils.validate_keyword_option(order, ['encoded', 'reversed', 'random'], 'order')
        edges = g.edge_list()
        if order == 'reversed':
            edges = edges[::-1]
        elif order == 'random':
            rng = mcutils.make_rng(seed)
            edges = [edges[i] for i in rng.permutation(len(edges))]
        return cls(edges, n=g.n, m=len(edges))

    @property
    def consumed(self):
        return self.__consumed

    def __iter__(self):
        if self.__consumed:
            raise SinglePassException('single-pass violated: the stream was already read')
        self.__consumed = True
        return self.__generate()

    def __generate(self):
        for (u, v) in self.__source:
            self.arrivals += 1
            yield (u, v)

    def __repr__(self):
        return "[" + hex(id(self)) + "]: STREAM (n=%s, m=%s, %i read)" % (str(self.n), str(self.m), self.arrivals)


def as_stream(source, n=None, m=None):
    if isinstance(source, SinglePassStream):
        return source
    if isinstance(source, Graph):
        return SinglePassStream.from_graph(source)
    return SinglePassStream(source, n=n, m=m)


## ------------------------------------------------------------------------
## cover functions

class CoverFunction:
    """
    Base of the ready-made cover functions. Subclasses implement __call__.

    """

    name = 'cover'

    def __call__(self, g, alpha):
        raise NotImplementedError

    def mc_bound(self, n, m, alpha, b1_capacity):
        return max(1, min(mcutils.choose2(n), m))

    def __repr__(self):
        return "[" + hex(id(self)) + "]: COVER FUNCTION %s" % (self.name)


class IdentityCover(CoverFunction):
    """
    Returns every edge. Its size bound is m, so only B_1 ever flushes.

    """

    name = 'identity'

    def __call__(self, g, alpha):
        return g.edges()

    def mc_bound(self, n, m, alpha, b1_capacity):
        return max(1, m)


class BruteCover(CoverFunction):
    """
    Smallest cover by enumeration (brute_force_optimal_cover).

    """

    name = 'brute'

    def __call__(self, g, alpha):
        return sorted(brute_force_optimal_cover(g, alpha))


class RegularityCoverFn(CoverFunction):
    """
    Cover function driven by build_cover.

    Buffers with fewer than t/gamma vertices are returned whole. The size
    bound comes from a calibration run on a random graph with as many edges as
    a full B_1, scaled by configs.MC_CALIBRATION_SLACK. When the calibration
    shows the cover keeping more than half of its input, buffers above B_1
    could never shrink, and the bound is raised to m so that they never fill.
    An empty calibration graph also gives m.

    """

    name = 'regularity'

    def __init__(self, params=None, verbose=False):
        if params is None:
            params = CoverParams(overflow='stop', workers=1)
        self.params = params
        self.verbose = verbose
        self.calls = 0
        self.calibration = None

    def __call__(self, g, alpha):
        if g.n < self.params.min_vertices():
            return g.edges()
        seed = None if self.params.seed is None else [int(self.params.seed), self.calls]
        self.calls += 1
        report = build_cover(g, self.params.replace(seed=seed), verbose=self.verbose)
        return sorted(report.F)

    def mc_bound(self, n, m, alpha, b1_capacity):
        if n < self.params.min_vertices():
            return max(1, m)
        pairs = mcutils.choose2(n)
        sample = gnp(n, min(1.0, b1_capacity / float(pairs)), seed=self.params.seed)
        kept = len(self(sample, alpha))
        self.calibration = (sample.m, kept)
        if sample.m == 0:
            return max(1, m)
        bound = max(1, int(math.ceil(configs.MC_CALIBRATION_SLACK * kept)))
        if kept > sample.m / 2.0:
            mcio.status_message('regularity cover keeps %i of %i calibration edges; raising the size bound to m' % (kept, sample.m), self.verbose)
            bound = max(bound, m)
        return bound


identity_cover = IdentityCover()
brute_cover = BruteCover()


def _mc_bound_of(cover_fn, n, m, alpha, b1_capacity):
    if hasattr(cover_fn, 'mc_bound'):
        return int(cover_fn.mc_bound(n, m, alpha, b1_capacity))
    return max(1, min(mcutils.choose2(n), m))


## ------------------------------------------------------------------------
## buffer cascade

class BufferCascade:
    """
    Buffers B_1..B_t over vertex set [0, n) for a stream of (at most) m edges.

    Parameters
    -----------
    n : int
        Number of vertices

    m : int
        Stream length. B_1 flushes every ceil(m/k) arrivals.

    k : int
        Reduction factor, at least 1

    alpha : float
        Target cover parameter; covers are computed at alpha / 2k

    cover_fn : callable
        cover_fn(g, alpha) returning edges of g

    mc_bound : int, optional
        Size bound of a single cover. Default asks cover_fn.

    seed : int
        Seed of the buffer dictionaries

    """

    def __init__(self, n, m, k, alpha, cover_fn, mc_bound=None, seed=None, verbose=False):
        if k < 1:
            raise MCException('Cascade reduction factor k must be at least 1, got %s' % (str(k)))
        mcutils.validate_fraction(alpha, 'alpha', lower_open=False)

        self.n = int(n)
        self.m = max(0, int(m))
        self.k = int(k)
        self.alpha = float(alpha)
        self.alpha_prime = self.alpha / (2.0 * self.k)
        self.cover_fn = cover_fn
        self.verbose = verbose

        self.t_levels = mcutils.ceil_log2(self.k) + 2
        self.b1_capacity = max(1, int(math.ceil(self.m / float(self.k))))
        if mc_bound is None:
            mc_bound = _mc_bound_of(cover_fn, self.n, self.m, self.alpha_prime, self.b1_capacity)
        self.mc_bound = max(1, int(mc_bound))
        self.bi_capacity = 2 * self.mc_bound

        pairs = max(1, mcutils.choose2(self.n))
        seeds = mcutils.spawn_seeds(seed, self.t_levels)
        self.__buffers = [CompactEdgeDict(self.n, min(self.b1_capacity, pairs), seed=seeds[0])]
        for level in range(1, self.t_levels):
            self.__buffers.append(CompactEdgeDict(self.n, min(self.bi_capacity, pairs), seed=seeds[level]))

        self.flush_counts = [0] * self.t_levels
        self.received = [0] * self.t_levels
        self.b1_arrivals = 0
        self.arrivals = 0
        self.cover_sizes = []
        self.bound_violations = 0
        self.space_meter = self.__bits()
        self.peak_bits = self.space_meter

    # ........................................................................
    #
    def __bits(self):
        return sum(buf.bits_used for buf in self.__buffers)

    def __meter(self):
        self.space_meter = self.__bits()
        if self.space_meter > self.peak_bits:
            self.peak_bits = self.space_meter

    def threshold(self, level):
        """
        Number of edges at which buffer ``level`` (0-based) flushes.

        """
        return self.b1_capacity if level == 0 else self.bi_capacity

    def max_flushes(self, level):
        return self.k / float(2 ** level)

    # ........................................................................
    #
    def feed(self, u, v):
        """
        Adds one stream edge to B_1 and flushes full buffers upwards.

        """
        edge = normalize_edge(u, v)
        if edge[1] >= self.n:
            raise MCException('Edge (%i, %i) outside [0, %i)' % (edge[0], edge[1], self.n))
        self.arrivals += 1
        self.b1_arrivals += 1
        self.received[0] += 1
        self.__buffers[0].add(*edge)
        self.__meter()
        if self.b1_arrivals >= self.b1_capacity:
            self.__flush(0)
        return self

    def __push(self, level, edge):
        self.received[level] += 1
        try:
            self.__buffers[level].add(*edge)
        except CapacityException:
            raise CascadeOverflowException('buffer B_%i is full before reaching its flush threshold' % (level + 1))
        self.__meter()
        if len(self.__buffers[level]) >= self.bi_capacity:
            self.__flush(level)

    def __flush(self, level):
        if level == self.t_levels - 1:
            raise CascadeOverflowException('top buffer B_%i reached %i edges; a flush would need B_%i (cover size bound %i exceeded?)' % (self.t_levels, self.bi_capacity, self.t_levels + 1, self.mc_bound))

        contents = self.__buffers[level].edges()
        buffer_graph = Graph(self.n, edges=contents)
        cover = sorted(set(normalize_edge(a, b) for (a, b) in self.cover_fn(buffer_graph, self.alpha_prime)))
        for e in cover:
            if e not in buffer_graph:
                raise MCException('Cover function returned (%i, %i), which is not in buffer B_%i' % (e[0], e[1], level + 1))
        if len(cover) > self.mc_bound:
            self.bound_violations += 1
            MCWarning('cover of B_%i has %i edges, above the size bound %i' % (level + 1, len(cover), self.mc_bound))

        self.cover_sizes.append((level + 1, len(contents), len(cover)))
        self.__buffers[level].clear()
        if level == 0:
            self.b1_arrivals = 0
        self.flush_counts[level] += 1
        self.__meter()
        self.check_flush_counts()
        mcio.status_message('flushed B_%i: %i edges -> %i' % (level + 1, len(contents), len(cover)), self.verbose)

        for e in cover:
            self.__push(level + 1, e)

    # ........................................................................
    #
    def check_flush_counts(self):
        for level, count in enumerate(self.flush_counts):
            if count > self.max_flushes(level) + configs.FLOAT_TOL:
                raise CascadeOverflowException('B_%i flushed %i times, more than k/2^%i = %.2f' % (level + 1, count, level, self.max_flushes(level)))
        if self.flush_counts[-1] > 0:
            raise CascadeOverflowException('top buffer flushed')

    def buffer_contents(self, level):
        return self.__buffers[level].edges()

    def buffer_sizes(self):
        return [len(buf) for buf in self.__buffers]

    def finalize(self):
        """
        Union of the buffer contents.

        """
        bound = self.space_bound_bits()
        if self.peak_bits > configs.CASCADE_SPACE_FACTOR * bound:
            MCWarning('cascade peaked at %i bits, more than %.1f times the space bound %.0f' % (self.peak_bits, configs.CASCADE_SPACE_FACTOR, bound))
        mcio.status_message('cascade peak %i bits (bound %.0f, flushes %s)' % (self.peak_bits, bound, str(self.flush_counts)), self.verbose)
        out = set()
        for buf in self.__buffers:
            out.update(buf.edges())
        return frozenset(out)

    def space_bound_bits(self):
        """
        Space formula with the measured cover bound: the documented dictionary
        bound for B_1 at m/k plus one for each higher buffer at 2 MC.

        """
        return sum(buf.bits_bound() for buf in self.__buffers)

    def stats(self):
        return {'k': self.k,
                'levels': self.t_levels,
                'alpha': self.alpha,
                'alpha_prime': self.alpha_prime,
                'b1_capacity': self.b1_capacity,
                'mc_bound': self.mc_bound,
                'flush_counts': list(self.flush_counts),
                'buffer_sizes': self.buffer_sizes(),
                'peak_bits': self.peak_bits,
                'space_bound_bits': self.space_bound_bits(),
                'bound_violations': self.bound_violations}

    def __repr__(self):
        return "[" + hex(id(self)) + "]: CASCADE (n=%i, k=%i, levels=%i, flushes=%s)" % (self.n, self.k, self.t_levels, str(self.flush_counts))


def cascade_feed(c, edge, cover_fn=None):
    """
    Feeds one edge into cascade ``c``. If cover_fn is given it replaces the
    cascade's cover function from now on.

    """
    if cover_fn is not None:
        c.cover_fn = cover_fn
    c.feed(*edge)
    return c


def cascade_finalize(c):
    return c.finalize()


## ------------------------------------------------------------------------
## vertex sparsification

class SparsifierMap:
    """
    Random function h: [0, n) -> [0, range), stored as a full table.

    """

    def __init__(self, n, range_size, seed=None):
        if range_size < 1:
            raise MCException('Sparsifier range must be at least 1, got %s' % (str(range_size)))
        self.n = int(n)
        self.range = int(range_size)
        rng = mcutils.make_rng(seed)
        self.table = rng.integers(0, self.range, size=self.n)

    @classmethod
    def for_opt(cls, n, opt, theta, seed=None):
        if opt < 1:
            raise MCException('opt must be at least 1, got %s' % (str(opt)))
        mcutils.validate_fraction(theta, 'theta', upper_open=True)
        return cls(n, int(math.ceil(8.0 * opt / theta)), seed=seed)

    def __call__(self, u):
        return int(self.table[u])

    def contract(self, u, v):
        """
        Image (h(u), h(v)) of an edge, or None when both ends collide.

        """
        a, b = int(self.table[u]), int(self.table[v])
        if a == b:
            return None
        return normalize_edge(a, b)

    def __repr__(self):
        return "[" + hex(id(self)) + "]: SPARSIFIER MAP (%i -> %i)" % (self.n, self.range)


def vertex_sparsify(g_stream, opt, theta, seed=None, n=None):
    """
    Contracts vertices through a random h onto ceil(8 opt / theta) buckets.

    Parameters
    -----------
    g_stream : Graph, SinglePassStream or iterable of edges

    opt : int
        Guess of mu(G), at least 1

    theta : float
        Slack in (0, 1)

    seed : int

    n : int
        Number of vertices; read from g_stream when it is a Graph or a
        stream with a declared n

    Returns
    --------
    Graph
        Multigraph on the buckets; collisions inside a bucket are dropped

    """
    if n is None:
        n = getattr(g_stream, 'n', None)
    if n is None:
        raise MCException('vertex_sparsify needs the number of vertices')
    edges = g_stream.edge_list() if isinstance(g_stream, Graph) else g_stream
    h = SparsifierMap.for_opt(n, opt, theta, seed=seed)
    out = Graph(h.range, multi=True)
    for (u, v) in edges:
        image = h.contract(u, v)
        if image is not None:
            out.insert_edge(*image)
    return out


## ------------------------------------------------------------------------
## matchers

def _stream_length(stream, n):
    m = getattr(stream, 'm', None)
    if m is None:
        return mcutils.choose2(n)
    return int(m)


class RegularityStreamMatcher:
    """
    Stores the first 2n^2/k edges and, next to them, runs a cascade driven by
    build_cover. If every edge was stored the answer is an exact maximum
    matching of the stored edges; otherwise a maximum matching of the cascade
    output.

    ``store_capacity`` overrides the size of the stored prefix; 0 disables it
    and always answers from the cascade.

    """

    def __init__(self, n, k, params=None, m=None, seed=None, cover_fn=None, alpha=None, store_capacity=None, verbose=False):
        if params is None:
            params = CoverParams(overflow='stop', workers=1, seed=seed)
        self.n = int(n)
        self.k = int(k)
        self.params = params
        self.alpha = params.alpha_value() if alpha is None else float(alpha)
        self.m = mcutils.choose2(self.n) if m is None else int(m)
        self.verbose = verbose

        if cover_fn is None:
            cover_fn = RegularityCoverFn(params, verbose=verbose)
        dict_seed, cascade_seed = mcutils.spawn_seeds(seed, 2)

        pairs = max(1, mcutils.choose2(self.n))
        if store_capacity is None:
            store_capacity = math.ceil(2.0 * self.n * self.n / self.k)
        self.store_capacity = max(0, int(store_capacity))
        self.__store = CompactEdgeDict(self.n, max(1, min(self.store_capacity, pairs)), seed=dict_seed)
        self.__storing = self.store_capacity > 0
        self.cascade = BufferCascade(self.n, self.m, self.k, self.alpha, cover_fn, seed=cascade_seed, verbose=verbose)
        self.arrivals = 0
        self.peak_bits = self.__store.bits_used + self.cascade.peak_bits

    def feed(self, u, v):
        self.arrivals += 1
        if self.__storing:
            if self.arrivals <= self.store_capacity:
                self.__store.add(u, v)
            else:
                self.__storing = False
                self.__store.clear()
        self.cascade.feed(u, v)
        self.peak_bits = max(self.peak_bits, self.__store.bits_used + self.cascade.space_meter)

    def finish(self):
        if self.__storing:
            return max_matching_general(Graph(self.n, edges=self.__store.edges()))
        return max_matching_general(Graph(self.n, edges=sorted(self.cascade.finalize())))

    @property
    def stored_everything(self):
        return self.__storing

    @property
    def report(self):
        out = {'algorithm': 'regularity-cascade',
               'n': self.n,
               'arrivals': self.arrivals,
               'stored': self.__storing,
               'store_capacity': self.store_capacity,
               'peak_bits': self.peak_bits,
               'naive_bits': configs.NAIVE_BITS_PER_EDGE * self.arrivals}
        out.update(self.cascade.stats())
        out['peak_bits'] = self.peak_bits
        out['cascade_peak_bits'] = self.cascade.peak_bits
        return out

    def run(self, stream):
        for (u, v) in stream:
            self.feed(u, v)
        return self.finish()


class _OptGuessBranch:
    """
    One opt guess: a sparsifier map, a cascade over the contracted stream and
    one raw preimage for every super-edge some buffer still holds.

    Matched super-edges use disjoint buckets and h sends every vertex to a
    single bucket, so the stored preimages of a matching never share a vertex.
    Preimages of super-edges that every buffer has dropped are pruned after
    each flush; ``peak_bits`` counts them next to the cascade's buffers.

    """

    def __init__(self, index, n, opt, epsilon, m, k, cover_fn, seed):
        hash_seed, cascade_seed = mcutils.spawn_seeds(seed, 2)
        self.index = index
        self.opt = opt
        self.h = SparsifierMap(n, int(math.ceil(32.0 * opt / epsilon)), seed=hash_seed)
        self.cascade = BufferCascade(self.h.range, m, k, epsilon ** 2 / 64.0, cover_fn, seed=cascade_seed)
        self.preimages = {}
        self.pruned = 0
        self.edge_bits = mcutils.ceil_log2(max(2, mcutils.choose2(n)))
        self.peak_bits = self.cascade.peak_bits

    @property
    def preimage_bits(self):
        return len(self.preimages) * self.edge_bits

    def __meter(self):
        self.peak_bits = max(self.peak_bits, self.cascade.space_meter + self.preimage_bits)

    def __prune(self):
        held = set()
        for level in range(self.cascade.t_levels):
            held.update(self.cascade.buffer_contents(level))
        dropped = [e for e in self.preimages if e not in held]
        for e in dropped:
            del self.preimages[e]
        self.pruned += len(dropped)

    def feed(self, u, v):
        image = self.h.contract(u, v)
        if image is None:
            return
        if image not in self.preimages:
            self.preimages[image] = normalize_edge(u, v)
        self.__meter()
        flushes = sum(self.cascade.flush_counts)
        self.cascade.feed(*image)
        if sum(self.cascade.flush_counts) != flushes:
            self.__prune()
        self.__meter()

    def projected_matching(self):
        """
        Maximum matching of the branch output, each matched super-edge
        replaced by its stored preimage.

        """
        output = Graph(self.h.range, edges=sorted(self.cascade.finalize()))
        projected = Matching()
        for edge in max_matching_general(output):
            preimage = self.preimages.get(edge)
            if preimage is None:
                raise ProjectionException('super-edge %s of branch %i has no preimage' % (str(edge), self.index))
            projected.add(*preimage)
        return projected


class OptGuessStreamMatcher:
    """
    Runs log2(k) branches in one pass; branch i guesses opt_i = n / 2^(i+1),
    contracts vertices onto ceil(32 opt_i / eps) buckets and cascades the
    contracted stream at alpha = eps^2 / 64. The first n^2/k raw edges are
    stored as H_0. The answer is a maximum matching of H_0 together with the
    projected branch matchings.

    """

    def __init__(self, n, k, epsilon, cover_fn=None, m=None, seed=None, verbose=False):
        mcutils.validate_fraction(epsilon, 'epsilon', upper_open=True)
        if epsilon >= 0.01:
            MCWarning('epsilon=%s is outside the recommended range (0, 0.01)' % (str(epsilon)))
        if k < 2:
            raise MCException('opt-guessing needs k >= 2, got %s' % (str(k)))

        self.n = int(n)
        self.k = int(k)
        self.epsilon = float(epsilon)
        self.m = mcutils.choose2(self.n) if m is None else int(m)
        self.verbose = verbose
        if cover_fn is None:
            cover_fn = brute_cover

        self.num_branches = max(1, mcutils.ceil_log2(self.k))
        seeds = mcutils.spawn_seeds(seed, self.num_branches + 1)
        self.store_capacity = max(1, int(math.ceil(self.n * self.n / float(self.k))))
        self.__store = CompactEdgeDict(self.n, min(self.store_capacity, max(1, mcutils.choose2(self.n))), seed=seeds[0])
        self.__storing = True
        self.branches = []
        for i in range(1, self.num_branches + 1):
            opt = max(1, self.n // (2 ** (i + 1)))
            self.branches.append(_OptGuessBranch(i, self.n, opt, self.epsilon, self.m, self.k, cover_fn, seeds[i]))
        self.arrivals = 0

    def feed(self, u, v):
        self.arrivals += 1
        if self.__storing:
            if self.arrivals <= self.store_capacity:
                self.__store.add(u, v)
            else:
                self.__storing = False
        for branch in self.branches:
            branch.feed(u, v)

    def finish(self):
        stored = self.__store.edges()
        if self.__storing:
            return max_matching_general(Graph(self.n, edges=stored))

        union = Graph(self.n, edges=stored)
        for branch in self.branches:
            for (u, v) in branch.projected_matching():
                union.insert_edge(u, v)
        return max_matching_general(union)

    @property
    def report(self):
        return {'algorithm': 'optguess',
                'n': self.n,
                'k': self.k,
                'epsilon': self.epsilon,
                'arrivals': self.arrivals,
                'stored': self.__storing,
                'store_capacity': self.store_capacity,
                'branches': self.num_branches,
                'ranges': [b.h.range for b in self.branches],
                'flush_counts': [list(b.cascade.flush_counts) for b in self.branches],
                'peak_bits': self.__store.bits_used + sum(b.peak_bits for b in self.branches),
                'preimages': [len(b.preimages) for b in self.branches],
                'pruned_preimages': [b.pruned for b in self.branches],
                'naive_bits': configs.NAIVE_BITS_PER_EDGE * self.arrivals}

    def run(self, stream):
        for (u, v) in stream:
            self.feed(u, v)
        return self.finish()


## ------------------------------------------------------------------------
## entry points

def stream_match_regularity(stream, n, k, params=None, seed=None, store_capacity=None, verbose=False):
    """
    Single-pass matching with the stored-prefix plus regularity-cascade
    scheme. The cascade sizes B_1 from the stream's declared length
    (n choose 2 when unknown).

    Returns
    --------
    Matching

    """
    stream = as_stream(stream, n=n)
    matcher = RegularityStreamMatcher(n, k, params=params, m=_stream_length(stream, n), seed=seed,
                                      store_capacity=store_capacity, verbose=verbose)
    return matcher.run(stream)


def stream_match_optguess(stream, n, k, epsilon, cover_fn=None, seed=None, verbose=False):
    """
    Single-pass (1 - eps)-approximate matching by opt-guessing.

    Returns
    --------
    Matching

    """
    stream = as_stream(stream, n=n)
    matcher = OptGuessStreamMatcher(n, k, epsilon, cover_fn=cover_fn, m=_stream_length(stream, n), seed=seed, verbose=verbose)
    return matcher.run(stream)


def stream_match_cascade(stream, n, k, alpha, cover_fn, seed=None, verbose=False):
    """
    Cascade without sparsification: a maximum matching of an alpha-cover of the
    stream, additive loss alpha n.

    Returns
    --------
    tuple
        (Matching, BufferCascade)

    """
    stream = as_stream(stream, n=n)
    cascade = BufferCascade(n, _stream_length(stream, n), k, alpha, cover_fn, seed=seed, verbose=verbose)
    for (u, v) in stream:
        cascade.feed(u, v)
    return max_matching_general(Graph(n, edges=sorted(cascade.finalize()))), cascade


def stream_match_greedy(stream, n=None):
    return greedy_stream_matching(as_stream(stream, n=n))
