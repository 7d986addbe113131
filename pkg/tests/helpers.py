"""Shared hypothesis strategies and small builders for the tests."""

import numpy as np
from hypothesis import strategies as st

from pairwalk.graph_core import WeightedGraph

seeds = st.integers(min_value=0, max_value=2**32 - 1)
models = st.sampled_from(["A", "L", "Q"])


def random_weighted(seed: int, n_min: int = 1, n_max: int = 8, p: float = 0.5, weighted: bool = True) -> WeightedGraph:
    rng = np.random.default_rng(seed)
    n = int(rng.integers(n_min, n_max + 1))
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, float(rng.uniform(0.5, 2.0)) if weighted else 1.0))
    return WeightedGraph.from_edges(n, edges)


def random_unit(seed: int, n: int) -> np.ndarray:
    v = np.random.default_rng(seed).normal(size=n)
    return v / np.linalg.norm(v)


def to_networkx(g):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_weighted_edges_from(g.edges)
    return h


def from_networkx(h) -> WeightedGraph:
    return WeightedGraph.from_edges(h.number_of_nodes(), [(u, v, d.get("weight", 1.0)) for u, v, d in h.edges(data=True)])
