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
mcmatching holds the Matching type and every matching algorithm the package
uses: Hopcroft-Karp on bipartite subgraphs, Edmonds' blossom algorithm on
general graphs, the greedy streaming baseline, Hall deficiency, and the
brute-force oracles used to check all of the above.

"""

from collections import deque
from functools import lru_cache

import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import maximum_bipartite_matching

from .mcexceptions import MCException
from .mcgraph import normalize_edge, VertexSet
from . import mcutils
from . import configs


# ........................................................................
#
class Matching:
    """
    A set of vertex-disjoint edges. Adding an edge that shares an endpoint with
    a stored edge raises an MCException, so a Matching is always a matching;
    ``validate`` additionally checks every edge against a host graph.

    """

    def __init__(self, edges=()):
        self.__mate = {}
        self.__edges = set()
        for (u, v) in edges:
            self.add(u, v)

    # ........................................................................
    #
    def add(self, u, v):
        u, v = normalize_edge(u, v)
        if u in self.__mate or v in self.__mate:
            raise MCException('Edge (%i, %i) shares an endpoint with the matching' % (u, v))
        self.__mate[u] = v
        self.__mate[v] = u
        self.__edges.add((u, v))

    # ........................................................................
    #
    def remove(self, u, v):
        """
        Removes (u, v) if it is in the matching; returns whether it was.

        """
        edge = normalize_edge(u, v)
        if edge not in self.__edges:
            return False
        self.__edges.remove(edge)
        del self.__mate[edge[0]]
        del self.__mate[edge[1]]
        return True

    # ........................................................................
    #
    def mate(self, u):
        return self.__mate.get(u)

    def is_matched(self, u):
        return u in self.__mate

    def vertices(self):
        return VertexSet(self.__mate.keys())

    def edges(self):
        return sorted(self.__edges)

    def copy(self):
        return Matching(self.__edges)

    # ........................................................................
    #
    def is_valid(self, g):
        for (u, v) in self.__edges:
            if u >= g.n or v >= g.n or not g.adjacency_query(u, v):
                return False
        return True

    def validate(self, g):
        for (u, v) in self.__edges:
            if u >= g.n or v >= g.n or not g.adjacency_query(u, v):
                raise MCException('Matched edge (%i, %i) is not an edge of the host graph' % (u, v))

    # ........................................................................
    #
    def __len__(self):
        return len(self.__edges)

    def __iter__(self):
        return iter(sorted(self.__edges))

    def __contains__(self, edge):
        u, v = edge
        if u == v:
            return False
        return normalize_edge(u, v) in self.__edges

    def __eq__(self, other):
        if not isinstance(other, Matching):
            return NotImplemented
        return self.edges() == other.edges()

    def __repr__(self):
        return "[" + hex(id(self)) + "]: MATCHING (%i edges)" % (len(self.__edges))


## ------------------------------------------------------------------------
## Hopcroft-Karp

def max_matching_bipartite(g, left, right, max_phases=None, initial=None):
    """
    Maximum matching of the bipartite subgraph g[left, right] by Hopcroft-Karp.

    Each phase layers the graph by BFS from the free left vertices and then
    augments along a maximal set of vertex-disjoint shortest paths found by
    DFS. Left vertices and adjacency lists are visited in increasing order,
    so the result is deterministic.

    Parameters
    -----------
    g : Graph
        Host graph; only edges between ``left`` and ``right`` are used

    left : iterable of int
        Left side

    right : iterable of int
        Right side, disjoint from ``left``

    max_phases : int or None
        Stop after this many phases. After k phases the matching has size at
        least k/(k+1) of the maximum. Default is None (run to optimality).

    initial : Matching or None
        Edges of this matching that run between the two sides seed the search.

    Returns
    --------
    Matching

    """
    left = VertexSet(left)
    right = VertexSet(right)
    if left & right:
        raise MCException('left and right must be disjoint (shared: %s)' % (str(sorted(left & right))))

    lefts = sorted(left)
    adj = {u: [v for v in g.neighbors(u) if v in right] for u in lefts}

    mate_l = {}
    mate_r = {}
    if initial is not None:
        for (u, v) in initial:
            if u in right and v in left:
                u, v = v, u
            if u in left and v in right and v in adj[u] and u not in mate_l and v not in mate_r:
                mate_l[u] = v
                mate_r[v] = u

    INF = len(lefts) + 2
    phases = 0
    while max_phases is None or phases < max_phases:

        # layering
        dist = {}
        queue = deque()
        for u in lefts:
            if u in mate_l:
                dist[u] = INF
            else:
                dist[u] = 0
                queue.append(u)

        found = INF
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for v in adj[u]:
                w = mate_r.get(v)
                if w is None:
                    if found == INF:
                        found = dist[u] + 1
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)

        if found == INF:
            break
        phases += 1

        # vertex-disjoint shortest augmenting paths
        pointer = {u: 0 for u in lefts}
        for root in lefts:
            if root in mate_l:
                continue
            stack = [root]
            path_v = []
            while stack:
                u = stack[-1]
                moved = False
                augmented = False
                while pointer[u] < len(adj[u]):
                    v = adj[u][pointer[u]]
                    pointer[u] += 1
                    w = mate_r.get(v)
                    if w is None:
                        if dist[u] + 1 == found:
                            path_v.append(v)
                            for x, y in zip(stack, path_v):
                                mate_l[x] = y
                                mate_r[y] = x
                            augmented = True
                            break
                    elif dist[w] == dist[u] + 1:
                        path_v.append(v)
                        stack.append(w)
                        moved = True
                        break

                if augmented:
                    break
                if not moved:
                    dist[u] = INF
                    stack.pop()
                    if path_v:
                        path_v.pop()

    return Matching((u, v) for u, v in mate_l.items())


def scipy_bipartite_matching_size(g, left, right):
    """
    Size of a maximum matching of g[left, right] computed with
    scipy.sparse.csgraph.maximum_bipartite_matching. Used to cross-check
    Hopcroft-Karp.

    """
    lefts = sorted(left)
    rights = sorted(right)
    if not lefts or not rights:
        return 0
    col = {v: j for j, v in enumerate(rights)}
    rows, cols = [], []
    for i, u in enumerate(lefts):
        for v in g.neighbors(u):
            if v in col:
                rows.append(i)
                cols.append(col[v])
    if not rows:
        return 0
    biadj = sparse.csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(len(lefts), len(rights)))
    assignment = maximum_bipartite_matching(biadj, perm_type='column')
    return int(np.count_nonzero(assignment >= 0))


## ------------------------------------------------------------------------
## Edmonds

def max_matching_general_task(g, initial=None, max_depth=None, roots=None):
    """
    Task form of max_matching_general (see mcutils.run_task).

    With max_depth set, searches stop expanding outer vertices at that depth of
    the alternating tree, so only augmenting paths of length up to
    2 max_depth - 1 are looked for; passes over the free vertices repeat until
    one finds nothing. A matching without such paths has at least
    max_depth / (max_depth + 1) of the maximum size.

    With roots given, a single search is run from each of them that is still
    free when its turn comes (isolated roots are skipped). Used to repair a
    warm start that only the roots can improve.

    Announced work: n units for each search initialisation and each blossom
    contraction, deg(v) units for every vertex taken off the BFS queue, where n
    is the number of non-isolated vertices.

    """
    verts = [u for u in range(g.n) if g.degree(u) > 0]
    index = {u: i for i, u in enumerate(verts)}
    N = len(verts)
    adj = [[index[w] for w in g.neighbors(u)] for u in verts]

    match = [-1] * N
    if initial is not None:
        for (u, v) in initial:
            if u in index and v in index and g.adjacency_query(u, v):
                a, b = index[u], index[v]
                if match[a] == -1 and match[b] == -1:
                    match[a] = b
                    match[b] = a
    else:
        yield N
        for v in range(N):
            if match[v] == -1:
                for w in adj[v]:
                    if match[w] == -1:
                        match[v] = w
                        match[w] = v
                        break

    parent = [-1] * N
    base = list(range(N))
    used = [False] * N
    depth = [0] * N

    def lca(a, b):
        seen = [False] * N
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v, b, child, blossom):
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_path(root):
        for i in range(N):
            used[i] = False
            parent[i] = -1
            base[i] = i
            depth[i] = 0
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if max_depth is not None and depth[v] >= max_depth:
                continue
            yield len(adj[v])
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    yield N
                    current = lca(v, to)
                    blossom = [False] * N
                    mark_path(v, current, to, blossom)
                    mark_path(to, current, v, blossom)
                    for i in range(N):
                        if blossom[base[i]]:
                            base[i] = current
                            if not used[i]:
                                used[i] = True
                                depth[i] = depth[current]
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    depth[match[to]] = depth[v] + 1
                    queue.append(match[to])
        return -1

    # a vertex with no augmenting path stays without one after later
    # augmentations, so one pass over the free vertices is enough; a bounded
    # search has no such guarantee and repeats until a pass augments nothing
    bounded = max_depth is not None and max_depth < N
    candidates = range(N) if roots is None else [index[r] for r in roots if r in index]
    augmented = True
    while augmented:
        augmented = False
        for root in candidates:
            if match[root] != -1:
                continue
            yield N
            end = yield from find_path(root)
            if end != -1:
                augmented = True
            v = end
            while v != -1:
                pv = parent[v]
                ppv = match[pv]
                match[v] = pv
                match[pv] = v
                v = ppv
        if not bounded or roots is not None:
            break

    return Matching((verts[i], verts[match[i]]) for i in range(N) if match[i] > i)


def max_matching_general(g, initial=None):
    """
    Maximum matching of a general graph by Edmonds' blossom algorithm.

    Parameters
    -----------
    g : Graph
        Host graph. Parallel copies are ignored.

    initial : Matching or iterable of edges, optional
        Warm start. Edges absent from g, or clashing with earlier edges, are
        skipped. Without a warm start a greedy matching is used.

    Returns
    --------
    Matching

    """
    result, _ = mcutils.run_task(max_matching_general_task(g, initial))
    return result


def matching_size(g):
    return len(max_matching_general(g))


## ------------------------------------------------------------------------
## greedy

def greedy_stream_matching(stream):
    """
    Greedy maximal matching in arrival order: keep an edge iff both endpoints
    are still free. The result has size at least half the maximum.

    """
    matching = Matching()
    for (u, v) in stream:
        if u == v:
            continue
        if not matching.is_matched(u) and not matching.is_matched(v):
            matching.add(u, v)
    return matching


## ------------------------------------------------------------------------
## Hall deficiency

def _exhaustive_hall_deficiency(g, lefts, rights, padding):
    col = {v: j for j, v in enumerate(rights)}
    nbr = []
    for u in lefts:
        mask = 0
        for v in g.neighbors(u):
            if v in col:
                mask |= 1 << col[v]
        nbr.append(mask)

    size = len(lefts)
    union = [0] * (1 << size)
    best = 0
    for mask in range(1, 1 << size):
        low = (mask & -mask).bit_length() - 1
        union[mask] = union[mask & (mask - 1)] | nbr[low]
        excess = bin(mask).count('1') - bin(union[mask]).count('1')
        if excess > best:
            best = excess
    return padding + best


def hall_deficiency(g, left, right, cross_check=True):
    """
    Deficiency n' - mu(g[left, right]) where both sides are padded with
    isolated vertices to the common size n' = max(|left|, |right|).

    By the deficiency form of Hall's theorem this equals the largest value of
    |A| - |N(A)| over subsets A of the padded left side. When n' is at most
    configs.HALL_CROSS_CHECK_LIMIT (and ``cross_check`` is set) that maximum is
    also computed by subset enumeration and compared.

    Parameters
    -----------
    g : Graph

    left : iterable of int

    right : iterable of int

    cross_check : bool
        Enumerate subsets on small inputs. Default is True.

    Returns
    --------
    int

    """
    left = VertexSet(left)
    right = VertexSet(right)
    n_prime = max(len(left), len(right))
    mu = len(max_matching_bipartite(g, left, right))
    deficiency = n_prime - mu

    if cross_check and n_prime <= configs.HALL_CROSS_CHECK_LIMIT:
        check = _exhaustive_hall_deficiency(g, sorted(left), sorted(right), n_prime - len(left))
        if check != deficiency:
            raise MCException('Hall deficiency mismatch: matching gives %i, subset enumeration gives %i' % (deficiency, check))

    return deficiency


## ------------------------------------------------------------------------
## brute-force oracles

def exhaustive_matching_size(g):
    """
    Maximum matching size by memoised recursion over the remaining vertex set
    (take the lowest remaining vertex out alone, or together with one of its
    remaining neighbours). Only meant for tiny graphs.

    """
    verts = [u for u in range(g.n) if g.degree(u) > 0]
    if len(verts) > configs.EXHAUSTIVE_MATCHING_LIMIT:
        raise MCException('exhaustive_matching_size supports at most %i non-isolated vertices, got %i' % (configs.EXHAUSTIVE_MATCHING_LIMIT, len(verts)))

    index = {u: i for i, u in enumerate(verts)}
    nbr = [0] * len(verts)
    for i, u in enumerate(verts):
        for w in g.neighbors(u):
            nbr[i] |= 1 << index[w]

    @lru_cache(maxsize=None)
    def best(mask):
        if mask == 0:
            return 0
        low = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << low)
        value = best(rest)
        candidates = nbr[low] & rest
        while candidates:
            bit = candidates & -candidates
            candidates ^= bit
            value = max(value, 1 + best(rest & ~bit))
        return value

    return best((1 << len(verts)) - 1)


def enumerate_matchings(edges, min_size=0):
    """
    Generator over every matching (as a tuple of edges, in input order) made of
    edges from ``edges`` with at least ``min_size`` edges.

    """
    edges = [normalize_edge(u, v) for (u, v) in edges]
    total = len(edges)

    def extend(start, used, chosen):
        if len(chosen) >= min_size:
            yield tuple(chosen)
        for i in range(start, total):
            if len(chosen) + (total - i) < min_size:
                return
            u, v = edges[i]
            if u in used or v in used:
                continue
            used.add(u)
            used.add(v)
            chosen.append(edges[i])
            yield from extend(i + 1, used, chosen)
            chosen.pop()
            used.discard(u)
            used.discard(v)

    yield from extend(0, set(), [])


def edge_matching_ratio(g):
    """
    Returns m / (2 n mu(G)), which is at most 1 for every graph (every edge
    touches one of the 2 mu matched vertices, each of degree below n).
    Returns 0.0 for a graph without edges.

    """
    if g.m == 0:
        return 0.0
    mu = matching_size(g.simple())
    return g.simple().m / (2.0 * g.n * mu)
