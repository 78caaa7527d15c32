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
mcgraph contains the Graph object every other module works on, the VertexSet
type, the pair encoding used to index edges and the bipartite double cover.

A Graph lives on the vertex set [0, n). Edges are unordered pairs without
self-loops. When a graph is built with ``multi=True`` parallel edges are kept
with their multiplicity; otherwise inserting a present edge is a no-op.

"""

import numpy as np
from scipy import sparse

from .mcexceptions import MCException, VertexRangeException


## ------------------------------------------------------------------------
## pair encoding
##
## unordered pair (u, v) with u < v maps to u*n - u(u+1)/2 + (v - u - 1),
## a bijection onto [0, n(n-1)/2)

def normalize_edge(u, v):
    """
    Returns the pair as (min, max). Self-loops raise a VertexRangeException.

    """
    u = int(u)
    v = int(v)
    if u == v:
        raise VertexRangeException('Self-loop (%i, %i) is not allowed' % (u, v))
    if u < v:
        return (u, v)
    return (v, u)


def _row_start(u, n):
    return u * n - (u * (u + 1)) // 2


def encode_pair(u, v, n):
    """
    Encodes an unordered vertex pair as an integer in [0, n(n-1)/2).

    Parameters
    -----------
    u : int
        First endpoint

    v : int
        Second endpoint

    n : int
        Number of vertices

    Returns
    --------
    int
        Position of the pair in the row-major upper-triangle order

    """
    u, v = normalize_edge(u, v)
    if u < 0 or v >= n:
        raise VertexRangeException('Pair (%i, %i) outside [0, %i)' % (u, v, n))
    return _row_start(u, n) + (v - u - 1)


def decode_pair(index, n):
    """
    Inverse of encode_pair.

    """
    index = int(index)
    universe = n * (n - 1) // 2
    if index < 0 or index >= universe:
        raise VertexRangeException('Pair index %i outside [0, %i)' % (index, universe))

    # largest u with row_start(u) <= index
    lo, hi = 0, n - 2
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _row_start(mid, n) <= index:
            lo = mid
        else:
            hi = mid - 1
    u = lo
    v = index - _row_start(u, n) + u + 1
    return (u, v)


# ........................................................................
#
class VertexSet(frozenset):
    """
    Immutable set of distinct vertices. When ``n`` is given every member is
    checked against [0, n).

    """

    def __new__(cls, members=(), n=None):
        members = [int(x) for x in members]
        self = super().__new__(cls, members)
        if len(self) != len(members):
            raise MCException('VertexSet members must be distinct')
        if n is not None:
            for x in members:
                if x < 0 or x >= n:
                    raise VertexRangeException('Vertex %i outside [0, %i)' % (x, n))
        return self

    def __init__(self, members=(), n=None):
        super().__init__()

    def sorted(self):
        return sorted(self)

    def mask(self, n):
        """
        Boolean numpy mask of length n with True at members.

        """
        out = np.zeros(n, dtype=bool)
        if len(self) > 0:
            out[np.fromiter(self, dtype=np.int64, count=len(self))] = True
        return out

    def __repr__(self):
        return "VertexSet(%s)" % (str(sorted(self)))


# ........................................................................
#
class Graph:
    """
    Undirected graph on [0, n) with optional edge multiplicities.

    Storage is one dictionary per vertex mapping each neighbour to the number of
    parallel edges, so adjacency queries are O(1) and deletions are exact.

    """

    def __init__(self, n, multi=False, edges=None):
        """
        Parameters
        -----------
        n : int
            Number of vertices

        multi : bool
            If True parallel edges are stored with multiplicity. Default is False.

        edges : iterable of (int, int)
            Optional initial edges, inserted in order.

        """
        n = int(n)
        if n < 0:
            raise MCException('Number of vertices must be non-negative, got %i' % (n))

        self.__n = n
        self.__multi = bool(multi)
        self.__adj = [dict() for _ in range(n)]
        self.__m = 0

        if edges is not None:
            for (u, v) in edges:
                self.insert_edge(u, v)

    # ........................................................................
    #
    @classmethod
    def from_edges(cls, n, edges, multi=False):
        return cls(n, multi=multi, edges=edges)

    # ........................................................................
    #
    @property
    def n(self):
        return self.__n

    @property
    def m(self):
        """
        Number of edges, parallel copies included.

        """
        return self.__m

    @property
    def multi(self):
        return self.__multi

    # ........................................................................
    #
    def __check_vertex(self, u):
        if u < 0 or u >= self.__n:
            raise VertexRangeException('Vertex %i outside [0, %i)' % (u, self.__n))

    # ........................................................................
    #
    def __check_pair(self, u, v):
        u, v = normalize_edge(u, v)
        self.__check_vertex(u)
        self.__check_vertex(v)
        return u, v

    # ........................................................................
    #
    def insert_edge(self, u, v):
        """
        Inserts the edge (u, v).

        Parameters
        -----------
        u : int
            First endpoint

        v : int
            Second endpoint

        Returns
        --------
        bool
            True if m increased (always True in multi mode, False when the edge
            was already present in a simple graph)

        """
        u, v = self.__check_pair(u, v)
        current = self.__adj[u].get(v, 0)
        if current > 0 and not self.__multi:
            return False
        self.__adj[u][v] = current + 1
        self.__adj[v][u] = current + 1
        self.__m += 1
        return True

    # ........................................................................
    #
    def delete_edge(self, u, v):
        """
        Removes one copy of the edge (u, v).

        Returns
        --------
        bool
            False if the edge was absent (the graph is then unchanged)

        """
        u, v = self.__check_pair(u, v)
        current = self.__adj[u].get(v, 0)
        if current == 0:
            return False
        if current == 1:
            del self.__adj[u][v]
            del self.__adj[v][u]
        else:
            self.__adj[u][v] = current - 1
            self.__adj[v][u] = current - 1
        self.__m -= 1
        return True

    # ........................................................................
    #
    def adjacency_query(self, u, v):
        """
        True iff (u, v) is an edge. u == v is never an edge.

        """
        self.__check_vertex(u)
        self.__check_vertex(v)
        return v in self.__adj[u]

    # ........................................................................
    #
    def adjacency_row(self, u, cols):
        """
        Answers the adjacency queries (u, c) for every c in ``cols``.

        Returns
        --------
        np.ndarray
            uint8 vector with 1 where the pair is an edge

        """
        self.__check_vertex(u)
        row = self.__adj[u]
        return np.fromiter((1 if c in row else 0 for c in cols), dtype=np.uint8, count=len(cols))

    # ........................................................................
    #
    def adjacency_block(self, rows, cols):
        """
        Batch of adjacency queries between ``rows`` and ``cols``.

        Parameters
        -----------
        rows : sequence of int
            Row vertices, in the order the block rows should follow

        cols : sequence of int
            Column vertices

        Returns
        --------
        np.ndarray
            uint8 matrix of shape (len(rows), len(cols))

        """
        rows = list(rows)
        cols = list(cols)
        block = np.zeros((len(rows), len(cols)), dtype=np.uint8)
        for i, r in enumerate(rows):
            block[i, :] = self.adjacency_row(r, cols)
        return block

    # ........................................................................
    #
    def multiplicity(self, u, v):
        self.__check_vertex(u)
        self.__check_vertex(v)
        return self.__adj[u].get(v, 0)

    def neighbors(self, u):
        self.__check_vertex(u)
        return sorted(self.__adj[u])

    def degree(self, u):
        """
        Number of edges at u, parallel copies included.

        """
        self.__check_vertex(u)
        return sum(self.__adj[u].values())

    # ........................................................................
    #
    def edges(self):
        """
        Distinct edges as a sorted list of (u, v) with u < v.

        """
        out = []
        for u in range(self.__n):
            for v in sorted(self.__adj[u]):
                if u < v:
                    out.append((u, v))
        return out

    def edge_list(self):
        """
        Edges with parallel copies repeated, sorted.

        """
        out = []
        for (u, v) in self.edges():
            out.extend([(u, v)] * self.__adj[u][v])
        return out

    def edge_set(self):
        return frozenset(self.edges())

    # ........................................................................
    #
    def adjacency_matrix(self):
        """
        Dense n x n matrix of edge multiplicities.

        """
        mat = np.zeros((self.__n, self.__n), dtype=np.int64)
        for u in range(self.__n):
            for v, c in self.__adj[u].items():
                mat[u, v] = c
        return mat

    def to_sparse(self):
        """
        scipy CSR matrix of edge multiplicities.

        """
        rows, cols, data = [], [], []
        for u in range(self.__n):
            for v, c in self.__adj[u].items():
                rows.append(u)
                cols.append(v)
                data.append(c)
        return sparse.csr_matrix((np.array(data, dtype=np.int64), (np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64))),
                                 shape=(self.__n, self.__n))

    # ........................................................................
    #
    def copy(self):
        new = Graph(self.__n, multi=self.__multi)
        for (u, v) in self.edge_list():
            new.insert_edge(u, v)
        return new

    def simple(self):
        """
        Returns a simple graph with one copy of every distinct edge.

        """
        return Graph(self.__n, multi=False, edges=self.edges())

    def bipartite_subgraph(self, left, right):
        """
        Returns the simple graph on the same vertex set that keeps only edges
        with one endpoint in ``left`` and the other in ``right``.

        """
        left = set(left)
        right = set(right)
        if left & right:
            raise MCException('left and right vertex sets must be disjoint')
        sub = Graph(self.__n)
        for u in sorted(left):
            for v in self.__adj[u]:
                if v in right:
                    sub.insert_edge(u, v)
        return sub

    # ........................................................................
    #
    def __contains__(self, edge):
        u, v = edge
        if u == v or min(u, v) < 0 or max(u, v) >= self.__n:
            return False
        return v in self.__adj[u]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.__n == other.n and self.__multi == other.multi and self.edge_list() == other.edge_list()

    def __repr__(self):
        return "[" + hex(id(self)) + "]: GRAPH (n=%i, m=%i, multi=%s)" % (self.__n, self.__m, self.__multi)


# ........................................................................
#
def double_cover(g):
    """
    Bipartite double cover of a simple graph.

    Vertex u of g becomes u (left copy) and n+u (right copy); every edge (u, v)
    of g becomes the two edges (u, n+v) and (v, n+u).

    Parameters
    -----------
    g : Graph
        Simple graph (parallel edges are rejected)

    Returns
    --------
    Graph
        Graph on 2n vertices with exactly 2m edges

    """
    n = g.n
    cover = Graph(2 * n)
    for (u, v) in g.edges():
        if g.multiplicity(u, v) > 1:
            raise MCException('double_cover needs a simple graph; (%i, %i) has parallel copies' % (u, v))
        cover.insert_edge(u, n + v)
        cover.insert_edge(v, n + u)
    return cover


def project_double_cover_edge(a, b, n):
    """
    Maps an edge of the double cover on 2n vertices back to the pair of g it
    came from.

    """
    a, b = normalize_edge(a, b)
    if not (a < n <= b < 2 * n):
        raise MCException('(%i, %i) is not an edge between the two sides of a double cover' % (a, b))
    return normalize_edge(a, b - n)

