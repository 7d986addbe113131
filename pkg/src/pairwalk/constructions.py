"""Graph operations for building state-transfer instances.

Index conventions (fixed, so Kronecker identities hold entry for entry):

* disjoint unions and joins place the parts one after another;
* ``cartesian(g1, g2)`` and ``blow_up``/``lexicographic`` map the pair
  ``(i, j)`` to ``i * n2 + j`` (first factor major);
* coronas keep the vertices of ``g`` first, followed by the copies of ``h``
  in attachment order (by vertex of ``g``, or by edge in ``g.edges`` order).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from .graph_core import Cluster, WeightedGraph

JoinWeight = Union[float, np.ndarray, Sequence[Sequence[float]]]


# -- named families --------------------------------------------------------


def empty_graph(n: int) -> WeightedGraph:
    return WeightedGraph.from_edges(n)


def complete_graph(n: int) -> WeightedGraph:
    return WeightedGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> WeightedGraph:
    return WeightedGraph.from_edges(n, [(u, u + 1) for u in range(n - 1)])


def cycle_graph(n: int) -> WeightedGraph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return WeightedGraph.from_edges(n, [(u, (u + 1) % n) for u in range(n)])


def complete_bipartite(m: int, n: int) -> WeightedGraph:
    """``K_{m,n}`` with parts ``0..m-1`` and ``m..m+n-1``."""
    return WeightedGraph.from_edges(m + n, [(u, m + v) for u in range(m) for v in range(n)])


def star_graph(leaves: int) -> WeightedGraph:
    """``K_{1,leaves}`` with the center at vertex 0."""
    return complete_bipartite(1, leaves)


# -- cluster attachment ------------------------------------------------------


@dataclass(frozen=True)
class AttachmentPlan:
    """Overlay of ``inner`` on the cluster vertices of ``base``.

    ``embedding[i]`` is the vertex of ``C`` playing vertex ``i`` of ``inner``;
    it defaults to ``cluster.C`` in order.
    """

    base: WeightedGraph
    cluster: Cluster
    inner: WeightedGraph
    embedding: Optional[tuple[int, ...]] = None

    def resolved_embedding(self) -> tuple[int, ...]:
        emb = self.cluster.C if self.embedding is None else tuple(int(v) for v in self.embedding)
        if self.inner.n != self.cluster.c:
            raise ValueError(f"inner graph has {self.inner.n} vertices, cluster has {self.cluster.c}")
        if sorted(emb) != sorted(self.cluster.C):
            raise ValueError("embedding must be a bijection onto the cluster vertices")
        return emb

    def validate(self) -> None:
        self.cluster.validate(self.base)
        self.resolved_embedding()


def attach(plan: AttachmentPlan) -> WeightedGraph:
    """``G(H)``: add the edges of ``plan.inner`` inside the cluster, weights kept."""
    plan.validate()
    emb = plan.resolved_embedding()
    extra = []
    for u, v, w in plan.inner.edges:
        a, b = emb[u], emb[v]
        if plan.base.has_edge(a, b):
            raise ValueError(f"edge ({a}, {b}) already present in the base graph")
        extra.append((a, b, w))
    return plan.base.with_edges(extra)


# -- complement and joins ----------------------------------------------------


def complement(g: WeightedGraph) -> WeightedGraph:
    if not g.is_unweighted:
        raise ValueError("complement is only defined here for unweighted graphs")
    present = g.edge_set()
    return WeightedGraph.from_edges(
        g.n, [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if (u, v) not in present]
    )


def disjoint_union(*parts: WeightedGraph) -> WeightedGraph:
    edges = []
    offset = 0
    for part in parts:
        edges.extend((u + offset, v + offset, w) for u, v, w in part.edges)
        offset += part.n
    return WeightedGraph.from_edges(offset, edges)


def _join_matrix(weight: JoinWeight, m: int, n: int) -> np.ndarray:
    if np.isscalar(weight):
        return np.full((m, n), float(weight))
    mat = np.asarray(weight, dtype=float)
    if mat.shape != (m, n):
        raise ValueError(f"join weight matrix must have shape {(m, n)}, got {mat.shape}")
    return mat


def join(g: WeightedGraph, h: WeightedGraph, weight: JoinWeight = 1.0) -> WeightedGraph:
    """``g`` v ``h``; ``weight`` is a scalar or a ``g.n x h.n`` matrix of cross weights.

    Use ``np.outer(w, np.ones(h.n))`` for weights fixed per vertex of ``g``,
    which keeps ``V(h)`` a cluster once the edges of ``h`` are removed.
    """
    return sequential_join([g, h], [weight])


def sequential_join(parts: Sequence[WeightedGraph], weights: Optional[Sequence[JoinWeight]] = None) -> WeightedGraph:
    """``H_1 v H_2 v ... v H_k``: only consecutive parts are joined."""
    if not parts:
        raise ValueError("sequential join needs at least one part")
    if weights is None:
        weights = [1.0] * (len(parts) - 1)
    if len(weights) != len(parts) - 1:
        raise ValueError("need one join weight per consecutive pair")
    offsets = np.cumsum([0] + [p.n for p in parts])
    edges = list(disjoint_union(*parts).edges)
    for j, weight in enumerate(weights):
        left, right = parts[j], parts[j + 1]
        mat = _join_matrix(weight, left.n, right.n)
        for u in range(left.n):
            for v in range(right.n):
                edges.append((offsets[j] + u, offsets[j + 1] + v, mat[u, v]))
    return WeightedGraph.from_edges(int(offsets[-1]), edges)


# -- products ----------------------------------------------------------------


def product_index(i: int, j: int, n2: int) -> int:
    """Flat index of the pair ``(i, j)`` in a first-factor-major product."""
    return i * n2 + j


def cartesian(g1: WeightedGraph, g2: WeightedGraph) -> WeightedGraph:
    n2 = g2.n
    edges = []
    for u, v, w in g1.edges:
        edges.extend((u * n2 + j, v * n2 + j, w) for j in range(n2))
    for u, v, w in g2.edges:
        edges.extend((i * n2 + u, i * n2 + v, w) for i in range(g1.n))
    return WeightedGraph.from_edges(g1.n * n2, edges)


def _corona(g: WeightedGraph, h: WeightedGraph, anchors: list[list[int]]) -> WeightedGraph:
    # anchors[k] lists the vertices of g joined to every vertex of copy k
    edges = list(g.edges)
    for k, targets in enumerate(anchors):
        base = g.n + k * h.n
        edges.extend((base + u, base + v, w) for u, v, w in h.edges)
        for a in targets:
            edges.extend((a, base + u) for u in range(h.n))
    return WeightedGraph.from_edges(g.n + len(anchors) * h.n, edges)


def vertex_corona(g: WeightedGraph, h: WeightedGraph) -> WeightedGraph:
    """One copy of ``h`` per vertex ``i`` of ``g``, joined to ``i``."""
    return _corona(g, h, [[i] for i in range(g.n)])


def edge_corona(g: WeightedGraph, h: WeightedGraph) -> WeightedGraph:
    """One copy of ``h`` per edge of ``g``, joined to both endpoints."""
    return _corona(g, h, [[u, v] for u, v, _ in g.edges])


def neighborhood_corona(g: WeightedGraph, h: WeightedGraph) -> WeightedGraph:
    """One copy of ``h`` per vertex ``i`` of ``g``, joined to the neighbors of ``i``."""
    nbrs = g.neighborhoods()
    return _corona(g, h, [sorted(nbrs[i]) for i in range(g.n)])


def corona_copy(g: WeightedGraph, h: WeightedGraph, k: int) -> list[int]:
    """Vertices of the ``k``-th copy of ``h`` in any corona of ``g`` with ``h``."""
    base = g.n + k * h.n
    return list(range(base, base + h.n))


def blow_up(g: WeightedGraph, c: int, inner: Sequence[Optional[WeightedGraph]]) -> WeightedGraph:
    """Replace vertex ``u`` of ``g`` by ``inner[u]`` on ``c`` vertices (``None`` = no edges).

    Clusters of adjacent vertices are completely joined with the weight of
    the original edge. Vertex ``(u, x)`` has index ``u * c + x``.
    """
    if len(inner) != g.n:
        raise ValueError(f"need {g.n} inner graphs, got {len(inner)}")
    edges = []
    for u, h in enumerate(inner):
        if h is None:
            continue
        if h.n != c:
            raise ValueError(f"inner graph {u} has {h.n} vertices, expected {c}")
        edges.extend((u * c + a, u * c + b, w) for a, b, w in h.edges)
    for u, v, w in g.edges:
        edges.extend((u * c + a, v * c + b, w) for a in range(c) for b in range(c))
    return WeightedGraph.from_edges(g.n * c, edges)


def lexicographic(g: WeightedGraph, h: WeightedGraph) -> WeightedGraph:
    """``g[h]``, vertex ``(u, x)`` at index ``u * h.n + x``."""
    return blow_up(g, h.n, [h] * g.n)


def blow_up_cluster(g: WeightedGraph, c: int, u: int) -> list[int]:
    return list(range(u * c, (u + 1) * c))


# -- perturbed complete graphs ---------------------------------------------------


def complete_minus_matching(n: int, m: int) -> WeightedGraph:
    """``K_n`` without the edges ``{0,1}, {2,3}, ..., {2m-2, 2m-1}``."""
    if m < 1:
        raise ValueError("matching size must be at least one")
    if 2 * m > n:
        raise ValueError(f"a matching of size {m} does not fit in K_{n}")
    return complete_graph(n).without_edges([(2 * i, 2 * i + 1) for i in range(m)])


def complete_minus_cycle(n: int, k: int) -> WeightedGraph:
    """``K_n`` without the edges of the cycle ``0, 1, ..., 2^k - 1``."""
    if k < 2:
        raise ValueError("k must be at least 2")
    length = 2 ** k
    if n < length:
        raise ValueError(f"K_{n} is too small to contain C_{length}")
    return complete_graph(n).without_edges([(i, (i + 1) % length) for i in range(length)])


def antipode(vertex: int, length: int) -> int:
    """Antipodal vertex on the cycle ``0..length-1``."""
    return (vertex + length // 2) % length


def is_regular(g: WeightedGraph, tol: float = 1e-12) -> bool:
    deg = g.degrees()
    return bool(np.all(np.abs(deg - deg[0]) <= tol * max(1.0, abs(deg[0]))))
