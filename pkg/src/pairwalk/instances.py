"""Seeded random instances and a small catalog of graphs with known transfer.

Random cluster instances are built directly in cluster form: a set ``C`` of
``c`` vertices is wired to a random set ``S`` with per-``S``-vertex weights
``z``, the remaining vertices get a random connected graph, and everything is
relabeled by a random permutation. ``H`` is drawn so that the all-ones
vector is an eigenvector of ``M(H)``: weighted circulants (regular) for
``A``/``Q``, any graph for ``L``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .constructions import AttachmentPlan, attach, cartesian, complete_graph, cycle_graph, disjoint_union, path_graph
from .graph_core import Cluster, Model, RealPureState, WeightedGraph, lift_state, pair_state

MAX_ORDER = 12


def _weight(rng: np.random.Generator, weighted: bool) -> float:
    return float(rng.uniform(0.5, 2.0)) if weighted else 1.0


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5, weighted: bool = True) -> WeightedGraph:
    edges = [(u, v, _weight(rng, weighted)) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return WeightedGraph.from_edges(n, edges)


def random_connected_graph(rng: np.random.Generator, n: int, p: float = 0.4, weighted: bool = True) -> WeightedGraph:
    order = rng.permutation(n)
    edges = {}
    for k in range(1, n):
        u, v = int(order[k]), int(order[rng.integers(0, k)])
        edges[(min(u, v), max(u, v))] = _weight(rng, weighted)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges[(u, v)] = _weight(rng, weighted)
    return WeightedGraph.from_edges(n, [(u, v, w) for (u, v), w in edges.items()])


def random_circulant(rng: np.random.Generator, c: int, weighted: bool = True) -> WeightedGraph:
    """Circulant graph with one random weight per distance class, hence regular."""
    distances = [d for d in range(1, c // 2 + 1) if rng.random() < 0.6] or [1]
    edges = {}
    for d in distances:
        w = _weight(rng, weighted)
        for i in range(c):
            j = (i + d) % c
            edges[(min(i, j), max(i, j))] = w
    return WeightedGraph.from_edges(c, [(u, v, w) for (u, v), w in edges.items()])


def random_inner(rng: np.random.Generator, c: int, model: Model, weighted: bool = True) -> WeightedGraph:
    if model is Model.L and rng.random() < 0.5:
        return random_graph(rng, c, 0.5, weighted)
    return random_circulant(rng, c, weighted)


def random_unit_orthogonal_to_ones(rng: np.random.Generator, c: int) -> np.ndarray:
    v = rng.normal(size=c)
    v -= v.mean()
    return v / np.linalg.norm(v)


@dataclass(frozen=True)
class ClusterInstance:
    base: WeightedGraph
    cluster: Cluster
    inner: WeightedGraph
    graph: WeightedGraph  # base with inner attached
    model: Model

    def lift(self, x) -> RealPureState:
        return lift_state(x, self.cluster.C, self.graph.n)

    @property
    def shift(self) -> float:
        return self.cluster.shift(self.model)


def random_base(
    rng: np.random.Generator, c: int, n_max: int = MAX_ORDER, weighted: bool = True
) -> tuple[WeightedGraph, Cluster]:
    """Connected graph on at most ``n_max`` vertices with a cluster of size ``c``."""
    if c + 1 > n_max:
        raise ValueError("cluster too large for the order bound")
    n = int(rng.integers(c + 1, n_max + 1))
    rest = list(range(c, n))
    size = int(rng.integers(1, len(rest) + 1))
    s_set = sorted(int(v) for v in rng.choice(rest, size=size, replace=False))
    z = {v: _weight(rng, weighted) for v in s_set}
    edges = [(u, v, z[v]) for u in range(c) for v in s_set]
    sub = random_connected_graph(rng, len(rest), 0.4, weighted)
    edges.extend((u + c, v + c, w) for u, v, w in sub.edges)

    perm = [int(p) for p in rng.permutation(n)]
    base = WeightedGraph.from_edges(n, edges).relabel(perm)
    inverse = {perm[v]: v for v in s_set}
    new_s = sorted(inverse)
    cluster = Cluster(tuple(perm[u] for u in range(c)), tuple(new_s), tuple(z[inverse[t]] for t in new_s))
    return base, cluster


def random_cluster_instance(
    rng: np.random.Generator,
    model: Model,
    n_max: int = MAX_ORDER,
    weighted: bool = True,
    inner: Optional[WeightedGraph] = None,
) -> ClusterInstance:
    if inner is None:
        c = int(rng.integers(2, min(6, n_max - 1) + 1))
        inner = random_inner(rng, c, model, weighted)
    base, cluster = random_base(rng, inner.n, n_max, weighted)
    graph = attach(AttachmentPlan(base, cluster, inner))
    return ClusterInstance(base, cluster, inner, graph, model)


@dataclass(frozen=True)
class KnownTransfer:
    """Graph ``h`` with PST from ``x`` to ``y`` at ``tau`` under ``models``."""

    name: str
    h: WeightedGraph
    x: RealPureState
    y: RealPureState
    tau: float
    models: tuple[Model, ...]


def _weighted_cycle4(w: float) -> WeightedGraph:
    return WeightedGraph.from_edges(4, [(u, (u + 1) % 4, w) for u in range(4)])


def known_transfers() -> list[KnownTransfer]:
    """Small graphs, all with the all-ones vector as an eigenvector, and their pair transfers."""
    all_models = (Model.A, Model.L, Model.Q)
    k2 = complete_graph(2)
    c4 = cycle_graph(4)
    two_k2 = disjoint_union(k2, k2)
    k2_k1 = disjoint_union(k2, complete_graph(1))
    cube = cartesian(cartesian(k2, k2), k2)
    return [
        KnownTransfer("C4", c4, pair_state(4, 0, 1), pair_state(4, 3, 2), math.pi / 2, all_models),
        KnownTransfer("C4 weight 2", _weighted_cycle4(2.0), pair_state(4, 0, 1), pair_state(4, 3, 2), math.pi / 4, all_models),
        KnownTransfer("P3", path_graph(3), pair_state(3, 0, 1), pair_state(3, 2, 1), math.pi / 2, (Model.L,)),
        KnownTransfer("2K2", two_k2, pair_state(4, 0, 2), pair_state(4, 1, 3), math.pi / 2, all_models),
        KnownTransfer("K2+K1", k2_k1, pair_state(3, 0, 2), pair_state(3, 1, 2), math.pi / 2, (Model.L,)),
        KnownTransfer("Q3", cube, pair_state(8, 0, 1), pair_state(8, 7, 6), math.pi / 2, all_models),
    ]
