import itertools

import networkx as nx
import numpy as np
import pytest

from core.gadgets import gap_two_fixture
from core.graph import Graph, build_family, from_matrix

POOL_DENSITIES = (0.15, 0.3, 0.5, 0.75)


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def from_networkx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(index), [(index[u], index[v]) for u, v in h.edges()])


def maximal_matching_sizes(g: Graph):
    """Sizes of all maximal matchings, straight from the definition."""
    edges = g.sorted_edges()
    sizes = set()
    for r in range(g.n // 2 + 1):
        for subset in itertools.combinations(edges, r):
            used = [v for e in subset for v in e]
            if len(used) != len(set(used)):
                continue
            covered = set(used)
            if all(u in covered or v in covered for u, v in edges):
                sizes.add(r)
    return sizes


@pytest.fixture
def gap_two():
    return gap_two_fixture()


@pytest.fixture
def p4():
    return build_family("path", [4])


@pytest.fixture(scope="session")
def random_graph_pool():
    """Seeded pools of random graphs with mixed densities."""
    def pool(count: int, n_min: int = 1, n_max: int = 12, seed: int = 0):
        rng = np.random.default_rng(seed)
        out = []
        for _ in range(count):
            n = int(rng.integers(n_min, n_max + 1))
            p = float(rng.choice(POOL_DENSITIES))
            upper = np.triu(rng.random((n, n)) < p, 1)
            out.append(from_matrix(upper | upper.T))
        return out
    return pool


@pytest.fixture
def settings_file(tmp_path):
    """A config file with the run log inside tmp_path."""
    path = tmp_path / "equimatch.yaml"
    path.write_text("oracle_cap: 20\ndefault_decider: alg2\nrun_log_path: runs.csv\nlog_runs: true\nlog_level: ERROR\n")
    return path
