import os
import itertools
import numpy as np
import pytest
import networkx as nx
import matchcover
from matchcover.mcgraph import Graph
from matchcover import mcgenerators


test_data_dir = matchcover.get_data('test_data')

SMALL_GRAPH_FILE = 'small_graph.txt'
SMALL_SCRIPT_FILE = 'small_script.txt'


@pytest.fixture(scope='session', autouse=True)
def K3(request):
    return mcgenerators.complete(3)


@pytest.fixture(scope='session', autouse=True)
def C5(request):
    return mcgenerators.cycle(5)


@pytest.fixture(scope='session', autouse=True)
def PETERSEN(request):
    nxg = nx.petersen_graph()
    return Graph(nxg.number_of_nodes(), edges=sorted(nxg.edges()))


@pytest.fixture(scope='session', autouse=True)
def PM8(request):
    return mcgenerators.perfect_matching(8)


@pytest.fixture(scope='session', autouse=True)
def SMALL_GRAPH(request):
    return os.path.join(test_data_dir, SMALL_GRAPH_FILE)


@pytest.fixture(scope='session', autouse=True)
def SMALL_SCRIPT(request):
    return os.path.join(test_data_dir, SMALL_SCRIPT_FILE)


# Shared oracle and corpus helpers.
# Adapted from:
# https://stackoverflow.com/questions/33508060/create-and-import-helper-functions-in-tests-without-creating-packages-in-test-di
class GraphHelper:
    @staticmethod
    def to_networkx(g):
        nxg = nx.Graph()
        nxg.add_nodes_from(range(g.n))
        nxg.add_edges_from(g.edges())
        return nxg

    @staticmethod
    def nx_matching_size(g):
        return len(nx.max_weight_matching(GraphHelper.to_networkx(g), maxcardinality=True))

    @staticmethod
    def bipartite_mu(g, a, b):
        a = set(a)
        b = set(b)
        nxg = nx.Graph()
        nxg.add_nodes_from(a)
        nxg.add_nodes_from(b)
        nxg.add_edges_from((u, v) for (u, v) in g.edges() if (u in a and v in b) or (u in b and v in a))
        return len(nx.max_weight_matching(nxg, maxcardinality=True))

    @staticmethod
    def random_corpus(count, n_max, seed, p_values=(0.2, 0.5, 0.8)):
        rng = np.random.default_rng(seed)
        out = []
        for i in range(count):
            n = int(rng.integers(2, n_max + 1))
            p = p_values[i % len(p_values)]
            out.append(mcgenerators.gnp(n, p, seed=int(rng.integers(2 ** 31))))
        return out

    @staticmethod
    def disjoint_pairs(n):
        """
        Every ordered pair of disjoint non-empty vertex sets; tiny n only.

        """
        everyone = list(range(n))
        for size_a in range(1, n):
            for a in itertools.combinations(everyone, size_a):
                rest = [v for v in everyone if v not in a]
                for size_b in range(1, len(rest) + 1):
                    for b in itertools.combinations(rest, size_b):
                        yield a, b

    @staticmethod
    def is_matching(edges):
        seen = set()
        for (u, v) in edges:
            if u in seen or v in seen:
                return False
            seen.add(u)
            seen.add(v)
        return True


@pytest.fixture(scope='session', autouse=True)
def graph_helper():
    return GraphHelper
