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
mcgenerators builds the seeded graph corpus used by the tests and by
``matchcover gen``.

Every generator is deterministic given its seed. The supported kinds are

    gnp                 n, p         each pair independently with probability p
    complete-bipartite  a, b         K_{a,b} on [0, a) x [a, a+b)
    perfect-matching    n            edges (2i, 2i+1); n must be even
    rs-layered          r, t         t induced matchings of size r (see rs_layered)
    path                n            0-1-...-(n-1)
    cycle               n            path plus (n-1, 0); n >= 3
    complete            n            K_n
    star                n            centre 0 joined to every other vertex
    planted             k, size, gamma   complete between k equal classes

"""

import numpy as np

from .mcexceptions import MCException
from .mcgraph import Graph
from .mcmatching import Matching
from .mcregularity import Partition
from . import mcutils


GENERATOR_KINDS = ['gnp', 'complete-bipartite', 'perfect-matching', 'rs-layered', 'path', 'cycle', 'complete', 'star', 'planted']


# ........................................................................
#
def _require(params, name, kind, cast=int):
    if name not in params:
        raise MCException('Generator %s needs parameter %s' % (kind, name))
    try:
        return cast(params[name])
    except (TypeError, ValueError):
        raise MCException('Generator %s: parameter %s=%s is not a valid %s' % (kind, name, str(params[name]), cast.__name__))


def _non_negative(value, name):
    if value < 0:
        raise MCException('%s must be non-negative, got %s' % (name, str(value)))
    return value


# ........................................................................
#
def gnp(n, p, seed=None):
    """
    Erdos-Renyi graph G(n, p). Pairs are drawn in upper-triangle order, one
    uniform variate per pair.

    """
    _non_negative(n, 'n')
    if not (0.0 <= p <= 1.0):
        raise MCException('p must lie in [0, 1], got %s' % (str(p)))
    rng = mcutils.make_rng(seed)
    rows, cols = np.triu_indices(n, 1)
    keep = rng.random(len(rows)) < p
    return Graph(n, edges=zip(rows[keep].tolist(), cols[keep].tolist()))


def complete_bipartite(a, b):
    _non_negative(a, 'a')
    _non_negative(b, 'b')
    return Graph(a + b, edges=((u, a + v) for u in range(a) for v in range(b)))


def perfect_matching(n):
    _non_negative(n, 'n')
    if n % 2 != 0:
        raise MCException('perfect-matching needs an even number of vertices, got %i' % (n))
    return Graph(n, edges=((2 * i, 2 * i + 1) for i in range(n // 2)))


def path(n):
    _non_negative(n, 'n')
    return Graph(n, edges=((i, i + 1) for i in range(n - 1)))


def cycle(n):
    if n < 3:
        raise MCException('cycle needs at least 3 vertices, got %i' % (n))
    g = path(n)
    g.insert_edge(n - 1, 0)
    return g


def complete(n):
    _non_negative(n, 'n')
    return Graph(n, edges=((u, v) for u in range(n) for v in range(u + 1, n)))


def star(n):
    _non_negative(n, 'n')
    return Graph(n, edges=((0, v) for v in range(1, n)))


# ........................................................................
#
def rs_layered(r, t, seed=None):
    """
    Layered Ruzsa-Szemeredi style graph.

    Vertices form t + 1 layers V_0..V_t of r vertices each (layer j is
    [j*r, (j+1)*r)). Matching j in 1..t joins the i-th vertex of V_{j-1} to
    the pi_j(i)-th vertex of V_j for a seeded permutation pi_j. Matching j is
    induced: the only other edges touching V_{j-1} or V_j go to V_{j-2} or
    V_{j+1}.

    Returns
    --------
    tuple
        (Graph, list of Matching)

    """
    if r < 1 or t < 1:
        raise MCException('rs-layered needs r >= 1 and t >= 1, got r=%i t=%i' % (r, t))
    rng = mcutils.make_rng(seed)
    g = Graph((t + 1) * r)
    matchings = []
    for j in range(1, t + 1):
        perm = rng.permutation(r)
        edges = [((j - 1) * r + i, j * r + int(perm[i])) for i in range(r)]
        for (u, v) in edges:
            g.insert_edge(u, v)
        matchings.append(Matching(edges))
    return g, matchings


def planted_partition(k, size, gamma):
    """
    Complete-between-classes graph on k classes of ``size`` vertices with an
    empty exceptional class. Every pair of the planted partition has density 1
    and is gamma-regular for every gamma.

    Returns
    --------
    tuple
        (Graph, Partition)

    """
    if k < 1 or size < 1:
        raise MCException('planted needs k >= 1 and size >= 1, got k=%i size=%i' % (k, size))
    n = k * size
    classes = [[]] + [list(range(i * size, (i + 1) * size)) for i in range(k)]
    g = Graph(n)
    for i in range(k):
        for j in range(i + 1, k):
            for u in classes[i + 1]:
                for v in classes[j + 1]:
                    g.insert_edge(u, v)
    return g, Partition(classes, n, gamma, t_min=k)


# ........................................................................
#
def gen_graph(kind, params, seed=None):
    """
    Builds a graph of the given kind.

    Parameters
    -----------
    kind : str
        One of GENERATOR_KINDS

    params : dict
        Generator parameters (see module docstring); values may be strings

    seed : int
        Seed for randomized kinds

    Returns
    --------
    Graph

    """
    mcutils.validate_keyword_option(kind, GENERATOR_KINDS, 'kind')

    if kind == 'gnp':
        return gnp(_require(params, 'n', kind), _require(params, 'p', kind, float), seed=seed)
    if kind == 'complete-bipartite':
        return complete_bipartite(_require(params, 'a', kind), _require(params, 'b', kind))
    if kind == 'perfect-matching':
        return perfect_matching(_require(params, 'n', kind))
    if kind == 'rs-layered':
        return rs_layered(_require(params, 'r', kind), _require(params, 't', kind), seed=seed)[0]
    if kind == 'path':
        return path(_require(params, 'n', kind))
    if kind == 'cycle':
        return cycle(_require(params, 'n', kind))
    if kind == 'complete':
        return complete(_require(params, 'n', kind))
    if kind == 'star':
        return star(_require(params, 'n', kind))

    return planted_partition(_require(params, 'k', kind), _require(params, 'size', kind), _require(params, 'gamma', kind, float))[0]


# positional parameter order used by the command line
POSITIONAL_PARAMS = {'gnp': ['n', 'p'],
                     'complete-bipartite': ['a', 'b'],
                     'perfect-matching': ['n'],
                     'rs-layered': ['r', 't'],
                     'path': ['n'],
                     'cycle': ['n'],
                     'complete': ['n'],
                     'star': ['n'],
                     'planted': ['k', 'size', 'gamma']}
