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
mccover builds matching covers from a regularity partition and checks them.

A subgraph H of G is an alpha-matching cover when, for all disjoint vertex
sets A and B,

    mu(H[A, B]) >= mu(G[A, B]) - alpha * n

and an alpha-hitting set when it has an edge between every disjoint pair
(A, B) with |A| = |B| = ceil(alpha n) that G matches perfectly. build_cover
assembles

    F1  every edge between a bad class pair (a pair touching C0 counts as bad)
    F2  every edge inside a class, C0 included
    F3  a Bernoulli(p) sample of the edges between good pairs

where a pair is good when it is regular and has density at least the
configured threshold (8 gamma by default).

The module also carries the consolidation routine for fractional matchings,
exhaustive and sampled verifiers, a brute-force optimal cover for tiny graphs,
cover lifting through the bipartite double cover, and an RS-partition checker.

"""

import itertools
import math

import numpy as np
import pandas as pd

from .mcexceptions import MCException, ConsolidationException
from .mcgraph import Graph, VertexSet, normalize_edge, double_cover, project_double_cover_edge
from .mcmatching import max_matching_general, greedy_stream_matching, enumerate_matchings
from .mcregularity import regular_partition_task
from . import mcfiles
from . import mcio
from . import mcutils
from . import configs


def default_alpha(gamma):
    """
    Unit-constant cover parameter (gamma ln(1/gamma))^(1/3).

    """
    mcutils.validate_fraction(gamma, 'gamma', upper_open=True)
    return (gamma * math.log(1.0 / gamma)) ** (1.0 / 3.0)


def cover_size_bound(n, gamma, k):
    """
    Bound on |F1| + |F2|: (gamma^2 + 1/k + gamma + 5 gamma) n^2 + n^2 / k.

    """
    k = max(1, k)
    return (gamma ** 2 + 1.0 / k + gamma + 5.0 * gamma) * n * n + n * n / float(k)


# ........................................................................
#
class CoverParams:
    """
    Parameters of build_cover.

    Every argument left as None takes its default from configs; the sampling
    probability defaults to min(1, 10 / ln n) and the density threshold to
    8 gamma.

    """

    def __init__(self, t=None, gamma=None, p_sample=None, good_density_threshold=None, seed=None,
                 max_rounds=None, alpha=None, overflow='raise', workers=None):

        self.t = configs.DEFAULT_T if t is None else int(t)
        self.gamma = configs.DEFAULT_GAMMA if gamma is None else float(gamma)
        self.p_sample = p_sample
        self.good_density_threshold = good_density_threshold
        self.seed = seed
        self.max_rounds = configs.DEFAULT_MAX_ROUNDS if max_rounds is None else int(max_rounds)
        self.alpha = alpha
        self.overflow = overflow
        self.workers = configs.THREADS if workers is None else int(workers)

        self.__check()

    # ........................................................................
    #
    def __check(self):
        if self.t < 1:
            raise MCException('t must be at least 1, got %i' % (self.t))
        mcutils.validate_fraction(self.gamma, 'gamma', upper_open=True)
        if self.p_sample is not None:
            mcutils.validate_fraction(self.p_sample, 'p_sample')
        if self.good_density_threshold is not None and self.good_density_threshold < 0:
            raise MCException('good_density_threshold must be non-negative, got %s' % (str(self.good_density_threshold)))
        if self.alpha is not None:
            mcutils.validate_fraction(self.alpha, 'alpha')
        mcutils.validate_keyword_option(self.overflow, ['raise', 'stop'], 'overflow')

    # ........................................................................
    #
    def sample_probability(self, n):
        if self.p_sample is not None:
            return float(self.p_sample)
        if n < 3:
            return 1.0
        return min(1.0, configs.SAMPLE_NUMERATOR / math.log(n))

    def density_threshold(self):
        if self.good_density_threshold is not None:
            return float(self.good_density_threshold)
        return configs.GOOD_DENSITY_FACTOR * self.gamma

    def alpha_value(self):
        if self.alpha is not None:
            return float(self.alpha)
        return default_alpha(self.gamma)

    def min_vertices(self):
        return self.t / self.gamma

    def replace(self, **changes):
        values = {'t': self.t, 'gamma': self.gamma, 'p_sample': self.p_sample,
                  'good_density_threshold': self.good_density_threshold, 'seed': self.seed,
                  'max_rounds': self.max_rounds, 'alpha': self.alpha, 'overflow': self.overflow,
                  'workers': self.workers}
        values.update(changes)
        return CoverParams(**values)

    def __repr__(self):
        return "[" + hex(id(self)) + "]: COVER PARAMS (t=%i, gamma=%.3f, p=%s, threshold=%s, seed=%s)" % (self.t, self.gamma, str(self.p_sample), str(self.good_density_threshold), str(self.seed))


# ........................................................................
#
class Verdict:
    """
    Result of a verifier. Truthy when the check passed.

    ``counterexample`` is the first violating (A, B) pair (sorted vertex
    tuples) or another description of the failure; ``checked`` counts the
    candidates examined.

    """

    def __init__(self, passed, counterexample=None, checked=0, mode=None, kind=None):
        self.passed = bool(passed)
        self.counterexample = counterexample
        self.checked = checked
        self.mode = mode
        self.kind = kind

    def __bool__(self):
        return self.passed

    def as_dict(self):
        ce = self.counterexample
        if isinstance(ce, tuple):
            ce = [list(part) if isinstance(part, (tuple, list, frozenset, set)) else part for part in ce]
        return {'kind': self.kind, 'mode': self.mode, 'passed': self.passed, 'checked': self.checked, 'counterexample': ce}

    def __repr__(self):
        return "[" + hex(id(self)) + "]: VERDICT %s (%s, %s, %i checked)" % ('PASS' if self.passed else 'FAIL', self.kind, self.mode, self.checked)


# ........................................................................
#
class CoverReport:
    """
    Output of build_cover: the cover F = F1 | F2 | F3 with the pair
    classification, the partition and the parameters that produced it.

    """

    def __init__(self, n, F1, F2, F3, pair_class, regularity, params, p, threshold, good_edges):
        self.n = n
        self.F1 = frozenset(F1)
        self.F2 = frozenset(F2)
        self.F3 = frozenset(F3)
        self.F = self.F1 | self.F2 | self.F3
        self.pair_class = pair_class
        self.regularity = regularity
        self.partition = regularity.partition if regularity is not None else None
        self.params = params
        self.p = p
        self.threshold = threshold
        self.good_edges = good_edges

    # ........................................................................
    #
    def __len__(self):
        return len(self.F)

    def to_graph(self):
        return Graph(self.n, edges=sorted(self.F))

    def good_pairs(self):
        return sorted(pair for pair, label in self.pair_class.items() if label == 'good')

    def size_bound(self):
        """
        Bound on |F1| + |F2| for this partition.

        """
        return cover_size_bound(self.n, self.params.gamma, self.partition.k)

    # ........................................................................
    #
    def pair_frame(self):
        """
        Pair table (one row per class pair) with the good/bad label and the
        number of sampled F3 edges on good pairs.

        """
        frame = self.regularity.to_frame()
        labels = self.partition.labels()
        f3_counts = {}
        for (u, v) in self.F3:
            key = tuple(sorted((int(labels[u]), int(labels[v]))))
            f3_counts[key] = f3_counts.get(key, 0) + 1
        frame['class'] = [self.pair_class.get((i, j), 'bad') for i, j in zip(frame['i'], frame['j'])]
        frame['f3_edges'] = [f3_counts.get((i, j), 0) for i, j in zip(frame['i'], frame['j'])]
        return frame

    def write(self, directory):
        mcfiles.write_cover_report(directory, self)

    # ........................................................................
    #
    def check_good_pair_samples(self, g, samples=100, seed=None):
        """
        For every good pair (C_i, C_j) draws ``samples`` random X in C_i and
        Y in C_j with |X| >= gamma|C_i| and |Y| >= gamma|C_j|, and checks

            |F3(X, Y)| >= (1/2) p d(X, Y) |X| |Y|

        Returns
        --------
        Verdict

        """
        rng = mcutils.make_rng(seed)
        gamma = self.params.gamma
        adjacency = g.simple().adjacency_matrix()
        sampled = np.zeros_like(adjacency)
        for (u, v) in self.F3:
            sampled[u, v] = 1
            sampled[v, u] = 1

        checked = 0
        for (i, j) in self.good_pairs():
            ci = np.array(self.partition[i].sorted())
            cj = np.array(self.partition[j].sorted())
            lo_i = max(1, math.ceil(gamma * len(ci) - configs.FLOAT_TOL))
            lo_j = max(1, math.ceil(gamma * len(cj) - configs.FLOAT_TOL))
            for _ in range(samples):
                x = rng.choice(ci, size=int(rng.integers(lo_i, len(ci) + 1)), replace=False)
                y = rng.choice(cj, size=int(rng.integers(lo_j, len(cj) + 1)), replace=False)
                edges = int(adjacency[np.ix_(x, y)].sum())
                kept = int(sampled[np.ix_(x, y)].sum())
                checked += 1
                if kept < 0.5 * self.p * edges - configs.FLOAT_TOL:
                    return Verdict(False, (i, j, tuple(sorted(x.tolist())), tuple(sorted(y.tolist()))), checked, 'sampled', 'good-pair-sample')
        return Verdict(True, None, checked, 'sampled', 'good-pair-sample')

    def __repr__(self):
        return "[" + hex(id(self)) + "]: COVER REPORT (|F|=%i: F1=%i, F2=%i, F3=%i)" % (len(self.F), len(self.F1), len(self.F2), len(self.F3))


## ------------------------------------------------------------------------
## construction

def build_cover_task(g, params=None, verbose=False):
    """
    Task form of build_cover (see mcutils.run_task).

    """
    if params is None:
        params = CoverParams()
    n = g.n
    if n < params.min_vertices():
        raise MCException('build_cover needs n >= t/gamma = %.2f, got n=%i' % (params.min_vertices(), n))

    partition_seed, sample_seed = mcutils.spawn_seeds(params.seed, 2)
    regularity = yield from regular_partition_task(g.simple(), params.t, params.gamma, max_rounds=params.max_rounds,
                                                   seed=partition_seed, workers=params.workers,
                                                   overflow=params.overflow, verbose=verbose)
    part = regularity.partition
    threshold = params.density_threshold()
    p = params.sample_probability(n)

    pair_class = {}
    for status in regularity.statuses:
        good = status.regular and float(status.density) >= threshold - configs.FLOAT_TOL
        pair_class[(status.i, status.j)] = 'good' if good else 'bad'
    for j in range(1, part.k + 1):
        pair_class[(0, j)] = 'bad'

    labels = part.labels()
    F1, F2, good_edges = [], [], []
    for u in range(n):
        nbrs = g.neighbors(u)
        yield max(1, len(nbrs))
        for v in nbrs:
            if v <= u:
                continue
            a, b = int(labels[u]), int(labels[v])
            if a == b:
                F2.append((u, v))
            elif pair_class[(min(a, b), max(a, b))] == 'good':
                good_edges.append((u, v))
            else:
                F1.append((u, v))

    # good_edges is in encoded (lexicographic) order, one draw per edge
    rng = mcutils.make_rng(sample_seed)
    draws = rng.random(len(good_edges))
    F3 = [e for e, r in zip(good_edges, draws) if r < p]

    mcio.status_message('cover: k=%i, |F1|=%i, |F2|=%i, |F3|=%i of %i good edges' % (part.k, len(F1), len(F2), len(F3), len(good_edges)), verbose)
    return CoverReport(n, F1, F2, F3, pair_class, regularity, params, p, threshold, len(good_edges))


def build_cover(g, params=None, verbose=False):
    """
    Builds a matching cover of g.

    Parameters
    -----------
    g : Graph
        Input graph; parallel copies are ignored

    params : CoverParams
        Construction parameters. Default is CoverParams().

    verbose : bool
        Print progress

    Returns
    --------
    CoverReport

    Raises
    --------
    MCException
        If n < t/gamma
    RefinementOverflowException
        If the partition overflows and params.overflow is 'raise'

    """
    report, _ = mcutils.run_task(build_cover_task(g, params, verbose=verbose))
    return report


## ------------------------------------------------------------------------
## fractional matchings

class FractionalMatching:
    """
    Non-negative edge weights in [0, 1] on a vertex set of size n_nodes.
    Vertex sums are not required to be at most 1.

    """

    def __init__(self, n_nodes, weights):
        self.n_nodes = int(n_nodes)
        self.weights = {}
        for edge, w in dict(weights).items():
            u, v = normalize_edge(*edge)
            if u < 0 or v >= self.n_nodes:
                raise MCException('Edge (%i, %i) outside [0, %i)' % (u, v, self.n_nodes))
            w = float(w)
            if w < 0 or w > 1:
                raise MCException('Edge weight %s of (%i, %i) outside [0, 1]' % (str(w), u, v))
            if (u, v) in self.weights:
                raise MCException('Edge (%i, %i) given twice' % (u, v))
            self.weights[(u, v)] = w

    def as_arrays(self):
        edges = sorted(self.weights)
        return edges, np.array([self.weights[e] for e in edges], dtype=np.float64)

    def vertex_sums(self):
        sums = np.zeros(self.n_nodes, dtype=np.float64)
        for (u, v), w in self.weights.items():
            sums[u] += w
            sums[v] += w
        return sums

    def total(self):
        return float(sum(self.weights.values()))

    def support(self):
        return frozenset(e for e, w in self.weights.items() if w > 0)

    def __getitem__(self, edge):
        return self.weights.get(normalize_edge(*edge), 0.0)

    def __repr__(self):
        return "[" + hex(id(self)) + "]: FRACTIONAL MATCHING (n=%i, |supp|=%i, total=%.4f)" % (self.n_nodes, len(self.support()), self.total())


def consolidation_floor(epsilon):
    """
    Smallest non-zero weight a consolidated matching may keep,
    epsilon^3 / (12 ln(1/epsilon)); infinite at epsilon = 1.

    """
    log_term = math.log(1.0 / epsilon)
    if log_term <= 0:
        return math.inf
    return epsilon ** 3 / (12.0 * log_term)


def consolidate(x, epsilon, seed=None, max_retries=None):
    """
    Rounds a fractional matching so that every kept weight is large.

    With beta = ceil(6 ln(1/eps) / eps^3) Bernoulli(x_e) trials per edge,
    z_e is the success fraction. Edges touching a vertex with
    z_v >= (1 + eps) x_v are dropped, the rest are scaled by 1 / (1 + eps),
    and weights under the floor are zeroed. The result y always satisfies

        (1) y_v <= x_v for every vertex
        (2) supp(y) is inside supp(x)
        (3) y_e = 0 or y_e >= eps^3 / (12 ln(1/eps))

    and the draw is repeated with fresh randomness until

        (4) |y| >= |x| - 2 eps n

    Parameters
    -----------
    x : FractionalMatching

    epsilon : float
        In (0, 1]

    seed : int
        Seed of the trials

    max_retries : int
        Attempts before giving up. Default is configs.CONSOLIDATE_RETRIES.

    Returns
    --------
    FractionalMatching

    Raises
    --------
    ConsolidationException
        If no attempt satisfied (4); the best attempt is on ``best``

    """
    mcutils.validate_fraction(epsilon, 'epsilon')
    if max_retries is None:
        max_retries = configs.CONSOLIDATE_RETRIES

    n = x.n_nodes
    edges, w = x.as_arrays()
    target = x.total() - 2.0 * epsilon * n
    if len(edges) == 0:
        return FractionalMatching(n, {})

    log_term = math.log(1.0 / epsilon)
    beta = max(1, math.ceil(6.0 * log_term / epsilon ** 3))
    floor = consolidation_floor(epsilon)

    us = np.array([e[0] for e in edges], dtype=np.int64)
    vs = np.array([e[1] for e in edges], dtype=np.int64)
    xv = x.vertex_sums()

    best = None
    best_total = -1.0
    for attempt_seed in mcutils.spawn_seeds(seed, max_retries):
        rng = mcutils.make_rng(attempt_seed)
        z = rng.binomial(beta, w) / float(beta)
        zv = np.bincount(us, weights=z, minlength=n) + np.bincount(vs, weights=z, minlength=n)
        ok = zv < (1.0 + epsilon) * xv
        y = np.where(ok[us] & ok[vs], z / (1.0 + epsilon), 0.0)
        y[y < floor] = 0.0

        total = float(y.sum())
        candidate = FractionalMatching(n, {e: val for e, val in zip(edges, y) if val > 0})
        if total >= target - configs.FLOAT_TOL:
            return candidate
        if total > best_total:
            best, best_total = candidate, total

    raise ConsolidationException('consolidate: no rounding reached |x| - 2 eps n = %.4f in %i attempts (best %.4f)' % (target, max_retries, best_total), best=best)


## ------------------------------------------------------------------------
## verification

def _edge_masks(n, edges):
    masks = [0] * n
    for (u, v) in edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _as_edges(h):
    if isinstance(h, Graph):
        return h.edges()
    return [normalize_edge(u, v) for (u, v) in h]


def _bipartite_size(masks, left, right_mask):
    """
    Kuhn's augmenting-path matching with neighbourhoods as bitmasks.

    """
    owner = {}

    def augment(u, visited):
        candidates = masks[u] & right_mask & ~visited[0]
        while candidates:
            bit = candidates & -candidates
            candidates ^= bit
            visited[0] |= bit
            v = bit.bit_length() - 1
            if v not in owner or augment(owner[v], visited):
                owner[v] = u
                return True
        return False

    size = 0
    for u in left:
        if augment(u, [0]):
            size += 1
    return size


def _mask_of(vertices):
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _sample_pairs(g, size_fn, samples, rng):
    """
    Generator of disjoint (A, B) candidates, cycling through three sources:
    sides of a maximum matching, sides of a random maximal matching, and
    uniformly random disjoint sets. size_fn(cap) returns the side size to use
    given the largest size available from that source.

    """
    n = g.n
    edges = g.edges()
    maximum = max_matching_general(g).edges()

    for draw in range(samples):
        source = draw % 3
        if source == 2 or not edges:
            s = size_fn(n // 2)
            if s <= 0:
                continue
            chosen = rng.permutation(n)[:2 * s]
            yield tuple(sorted(chosen[:s].tolist())), tuple(sorted(chosen[s:].tolist()))
            continue

        if source == 0:
            pool = maximum
        else:
            order = rng.permutation(len(edges))
            pool = greedy_stream_matching(edges[i] for i in order).edges()
        s = size_fn(len(pool))
        if s <= 0:
            continue
        picks = rng.choice(len(pool), size=s, replace=False)
        a, b = [], []
        for idx in picks:
            u, v = pool[int(idx)]
            if rng.random() < 0.5:
                u, v = v, u
            a.append(u)
            b.append(v)
        yield tuple(sorted(a)), tuple(sorted(b))


def verify_hitting_set(g, h, alpha, mode='exhaustive', samples=None, seed=None):
    """
    Checks that h is an alpha-hitting set of g: every disjoint (A, B) with
    |A| = |B| = s = ceil(alpha n) and mu(g[A, B]) = s has an h-edge between A
    and B.

    Parameters
    -----------
    g : Graph

    h : Graph or iterable of edges

    alpha : float
        In [0, 1]

    mode : str
        'exhaustive' (n <= configs.EXHAUSTIVE_HITTING_LIMIT) or 'sampled'

    samples : int
        Candidates drawn in sampled mode. Default is configs.VERIFY_SAMPLES.

    seed : int
        Seed of the sampled mode

    Returns
    --------
    Verdict

    """
    mcutils.validate_keyword_option(mode, ['exhaustive', 'sampled'], 'mode')
    mcutils.validate_fraction(alpha, 'alpha', lower_open=False)
    n = g.n
    s = math.ceil(alpha * n - configs.FLOAT_TOL)
    if s == 0 or 2 * s > n:
        return Verdict(True, None, 0, mode, 'hitting-set')

    gmask = _edge_masks(n, g.edges())
    hmask = _edge_masks(n, _as_edges(h))

    def violates(a, b):
        b_mask = _mask_of(b)
        if any(hmask[u] & b_mask for u in a):
            return False
        return _bipartite_size(gmask, a, b_mask) == s

    checked = 0
    if mode == 'exhaustive':
        if n > configs.EXHAUSTIVE_HITTING_LIMIT:
            raise MCException('Exhaustive hitting-set check supports n <= %i, got %i' % (configs.EXHAUSTIVE_HITTING_LIMIT, n))
        everyone = range(n)
        for a in itertools.combinations(everyone, s):
            a_set = set(a)
            rest = [v for v in everyone if v not in a_set]
            for b in itertools.combinations(rest, s):
                if b[0] < a[0]:
                    continue
                checked += 1
                if violates(a, b):
                    return Verdict(False, (a, b), checked, mode, 'hitting-set')
        return Verdict(True, None, checked, mode, 'hitting-set')

    if samples is None:
        samples = configs.VERIFY_SAMPLES
    rng = mcutils.make_rng(seed)
    for a, b in _sample_pairs(g, lambda cap: s if cap >= s else 0, samples, rng):
        checked += 1
        if violates(a, b):
            return Verdict(False, (a, b), checked, mode, 'hitting-set')
    return Verdict(True, None, checked, mode, 'hitting-set')


def verify_matching_cover(g, h, alpha, mode='exhaustive', samples=None, seed=None):
    """
    Checks mu(h[A, B]) >= mu(g[A, B]) - alpha n over disjoint (A, B).

    The exhaustive mode (n <= configs.EXHAUSTIVE_COVER_LIMIT) enumerates
    equal-size pairs (P, Q) that g matches perfectly with |P| > alpha n. This
    is equivalent to checking every (A, B): if (A, B) violates the inequality,
    so do the two sides (P, Q) of a maximum matching of g[A, B], since
    mu(h[P, Q]) <= mu(h[A, B]).

    Parameters
    -----------
    g : Graph

    h : Graph or iterable of edges

    alpha : float
        In [0, 1]

    mode : str
        'exhaustive' or 'sampled'

    samples : int
        Candidates drawn in sampled mode. Default is configs.VERIFY_SAMPLES.

    seed : int
        Seed of the sampled mode

    Returns
    --------
    Verdict
        The counterexample, if any, is (A, B, mu_g, mu_h)

    """
    mcutils.validate_keyword_option(mode, ['exhaustive', 'sampled'], 'mode')
    mcutils.validate_fraction(alpha, 'alpha', lower_open=False)
    n = g.n
    slack = alpha * n
    gmask = _edge_masks(n, g.edges())
    hmask = _edge_masks(n, _as_edges(h))
    checked = 0

    if mode == 'exhaustive':
        if n > configs.EXHAUSTIVE_COVER_LIMIT:
            raise MCException('Exhaustive matching-cover check supports n <= %i, got %i' % (configs.EXHAUSTIVE_COVER_LIMIT, n))
        everyone = range(n)
        first = math.floor(slack + configs.FLOAT_TOL) + 1
        for s in range(max(1, first), n // 2 + 1):
            for p in itertools.combinations(everyone, s):
                p_set = set(p)
                rest = [v for v in everyone if v not in p_set]
                for q in itertools.combinations(rest, s):
                    if q[0] < p[0]:
                        continue
                    q_mask = _mask_of(q)
                    if _bipartite_size(gmask, p, q_mask) != s:
                        continue
                    checked += 1
                    mu_h = _bipartite_size(hmask, p, q_mask)
                    if mu_h < s - slack - configs.FLOAT_TOL:
                        return Verdict(False, (p, q, s, mu_h), checked, mode, 'matching-cover')
        return Verdict(True, None, checked, mode, 'matching-cover')

    if samples is None:
        samples = configs.VERIFY_SAMPLES
    rng = mcutils.make_rng(seed)
    low = math.floor(slack + configs.FLOAT_TOL) + 1

    def size_fn(cap):
        if cap < max(1, low):
            return 0
        return int(rng.integers(max(1, low), cap + 1))

    for a, b in _sample_pairs(g, size_fn, samples, rng):
        b_mask = _mask_of(b)
        mu_g = _bipartite_size(gmask, a, b_mask)
        checked += 1
        if mu_g <= slack:
            continue
        mu_h = _bipartite_size(hmask, a, b_mask)
        if mu_h < mu_g - slack - configs.FLOAT_TOL:
            return Verdict(False, (a, b, mu_g, mu_h), checked, mode, 'matching-cover')
    return Verdict(True, None, checked, mode, 'matching-cover')


## ------------------------------------------------------------------------
## oracles

def brute_force_optimal_cover(g, alpha):
    """
    Smallest alpha-matching cover of g by enumeration over edge subsets,
    ties broken by lexicographic order of the encoded edges.

    When alpha n < 1 the additive slack is below one edge, so every edge is
    needed (its own endpoints form a violating pair otherwise) and E(g) is
    returned directly.

    Parameters
    -----------
    g : Graph
        At most configs.BRUTE_FORCE_EDGE_LIMIT distinct edges

    alpha : float

    Returns
    --------
    frozenset of (int, int)

    """
    mcutils.validate_fraction(alpha, 'alpha', lower_open=False)
    edges = g.edges()
    n = g.n
    slack = alpha * n
    if slack < 1 - configs.FLOAT_TOL:
        return frozenset(edges)
    if len(edges) > configs.BRUTE_FORCE_EDGE_LIMIT:
        raise MCException('brute_force_optimal_cover supports at most %i edges, got %i' % (configs.BRUTE_FORCE_EDGE_LIMIT, len(edges)))

    # every pair (P, Q) that g matches perfectly with |P| > slack; by the
    # reduction in verify_matching_cover these are the only pairs to check
    first = math.floor(slack + configs.FLOAT_TOL) + 1
    constraints = set()
    for matching in enumerate_matchings(edges, min_size=first):
        s = len(matching)
        head, tail = matching[0], matching[1:]
        for flips in itertools.product((False, True), repeat=len(tail)):
            p, q = [head[0]], [head[1]]
            for (u, v), flip in zip(tail, flips):
                if flip:
                    u, v = v, u
                p.append(u)
                q.append(v)
            constraints.add((tuple(sorted(p)), _mask_of(q), s))
    constraints = sorted(constraints, key=lambda c: (-c[2], c[0], c[1]))

    for size in range(len(edges) + 1):
        for subset in itertools.combinations(edges, size):
            masks = _edge_masks(n, subset)
            if all(_bipartite_size(masks, p, q_mask) >= s - slack - configs.FLOAT_TOL for p, q_mask, s in constraints):
                return frozenset(subset)

    return frozenset(edges)


def brute_cover_size(g, alpha):
    return len(brute_force_optimal_cover(g, alpha))


def lift_cover_via_double_cover(g, bipartite_cover_fn):
    """
    Projects a cover of the bipartite double cover back onto g: (u, v) is kept
    iff (u, n+v) or (v, n+u) is in the bipartite cover. An alpha'-cover of the
    double cover projects to a 2 alpha'-cover of g.

    Parameters
    -----------
    g : Graph
        Simple graph

    bipartite_cover_fn : callable
        Called with the double cover (a Graph on 2n vertices); returns an
        iterable of its edges

    Returns
    --------
    frozenset of (int, int)

    """
    doubled = double_cover(g)
    lifted = set()
    for (a, b) in bipartite_cover_fn(doubled):
        if (a, b) not in doubled:
            raise MCException('(%i, %i) returned by the cover function is not an edge of the double cover' % (a, b))
        lifted.add(project_double_cover_edge(a, b, g.n))
    return frozenset(lifted)


def verify_rs_partition(g, matchings, r):
    """
    True iff ``matchings`` partition E(g), each has exactly r edges, and each
    is induced (no other edge of g joins two of its vertices).

    Returns
    --------
    Verdict
        The counterexample is a short description of the first failure

    """
    seen = set()
    for index, matching in enumerate(matchings):
        edges = [normalize_edge(u, v) for (u, v) in matching]
        if len(edges) != r:
            return Verdict(False, 'matching %i has %i edges, expected %i' % (index, len(edges), r), index, None, 'rs-partition')
        for e in edges:
            if e not in g:
                return Verdict(False, 'matching %i uses non-edge %s' % (index, str(e)), index, None, 'rs-partition')
            if e in seen:
                return Verdict(False, 'edge %s appears in two matchings' % (str(e)), index, None, 'rs-partition')
            seen.add(e)

        own = set(edges)
        vertices = VertexSet(v for e in edges for v in e)
        for u in vertices:
            for w in g.neighbors(u):
                if w in vertices and normalize_edge(u, w) not in own:
                    return Verdict(False, 'matching %i is not induced: chord %s' % (index, str(normalize_edge(u, w))), index, None, 'rs-partition')

    missing = g.edge_set() - seen
    if missing:
        return Verdict(False, 'edge %s is in no matching' % (str(min(missing))), len(matchings), None, 'rs-partition')
    return Verdict(True, None, len(matchings), None, 'rs-partition')


def cover_frame(report):
    """
    One-row pandas summary of a CoverReport.

    """
    part = report.partition
    return pd.DataFrame([{'n': report.n, 'k': part.k, 'class_size': part.class_size, 'exceptional': len(part.exceptional),
                          'F1': len(report.F1), 'F2': len(report.F2), 'F3': len(report.F3), 'F': len(report.F),
                          'good_pairs': len(report.good_pairs()), 'p': report.p, 'threshold': report.threshold,
                          'status': report.regularity.status, 'rounds': report.regularity.rounds}])
