"""Weighted graphs, Hamiltonian matrices, clusters and real pure states."""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence, Union

import numpy as np

WEIGHT_RTOL = 1e-9
NORM_TOL = 1e-12


class Model(enum.Enum):
    """Hamiltonian model generating the walk ``U(t) = exp(itM)``.

    ``zeta`` is the sign of the off-diagonal block and ``delta`` says whether
    the degree matrix enters ``M``.
    """

    A = ("A", 1, 0)
    L = ("L", -1, 1)
    Q = ("Q", 1, 1)

    def __init__(self, tag: str, zeta: int, delta: int):
        self.tag = tag
        self.zeta = zeta
        self.delta = delta

    @property
    def long_name(self) -> str:
        return {"A": "adjacency", "L": "laplacian", "Q": "signless-laplacian"}[self.tag]

    @classmethod
    def parse(cls, value: Union[str, "Model"]) -> "Model":
        if isinstance(value, Model):
            return value
        key = str(value).strip()
        aliases = {
            "a": cls.A, "adjacency": cls.A,
            "l": cls.L, "laplacian": cls.L,
            "q": cls.Q, "signless": cls.Q, "signless-laplacian": cls.Q,
            "signlesslaplacian": cls.Q,
        }
        try:
            return aliases[key.lower()]
        except KeyError:
            raise ValueError(f"unknown Hamiltonian model {value!r}") from None


MODELS = (Model.A, Model.L, Model.Q)


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected graph with positive edge weights on vertices ``0..n-1``.

    Edges are stored once per unordered pair as ``(u, v, w)`` with ``u < v``,
    sorted. Build instances with :meth:`from_edges`, which normalizes input.
    """

    n: int
    edges: tuple[tuple[int, int, float], ...] = ()
    labels: tuple[str, ...] | None = None
    _lookup: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {self.n!r}")
        lookup = {}
        for u, v, w in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u > v:
                raise ValueError("edges must be stored with u < v; use from_edges")
            if not (w > 0 and math.isfinite(w)):
                raise ValueError(f"edge ({u}, {v}) has non-positive weight {w}")
            if (u, v) in lookup:
                raise ValueError(f"duplicate edge ({u}, {v})")
            lookup[(u, v)] = float(w)
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must have one entry per vertex")
        object.__setattr__(self, "_lookup", lookup)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence] = (), labels=None) -> "WeightedGraph":
        """Build a graph from ``(u, v)`` or ``(u, v, w)`` items; weight defaults to 1."""
        norm = {}
        for item in edges:
            if len(item) == 2:
                u, v = item
                w = 1.0
            elif len(item) == 3:
                u, v, w = item
            else:
                raise ValueError(f"malformed edge {item!r}")
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = _norm_edge(u, v)
            if key in norm:
                raise ValueError(f"duplicate edge {key}")
            norm[key] = float(w)
        packed = tuple(sorted((u, v, w) for (u, v), w in norm.items()))
        return cls(int(n), packed, tuple(labels) if labels is not None else None)

    # -- queries -------------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self._lookup

    def weight(self, u: int, v: int) -> float:
        """Weight of edge ``{u, v}``, or 0.0 if absent."""
        return self._lookup.get(_norm_edge(u, v), 0.0)

    def edge_set(self) -> frozenset:
        return frozenset((u, v) for u, v, _ in self.edges)

    def neighborhood(self, u: int) -> dict[int, float]:
        """Neighbors of ``u`` mapped to edge weights."""
        out = {}
        for a, b, w in self.edges:
            if a == u:
                out[b] = w
            elif b == u:
                out[a] = w
        return out

    def neighborhoods(self) -> list[dict[int, float]]:
        nbrs: list[dict[int, float]] = [{} for _ in range(self.n)]
        for u, v, w in self.edges:
            nbrs[u][v] = w
            nbrs[v][u] = w
        return nbrs

    def degrees(self) -> np.ndarray:
        """Weighted degrees."""
        deg = np.zeros(self.n)
        for u, v, w in self.edges:
            deg[u] += w
            deg[v] += w
        return deg

    @property
    def is_unweighted(self) -> bool:
        return all(w == 1.0 for _, _, w in self.edges)

    def is_connected(self) -> bool:
        nbrs = self.neighborhoods()
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in nbrs[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.n

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v, w in self.edges:
            a[u, v] = w
            a[v, u] = w
        return a

    # -- derived graphs --------------------------------------------------

    def with_edges(self, extra: Iterable[Sequence]) -> "WeightedGraph":
        items = [e for e in self.edges] + [tuple(e) for e in extra]
        return WeightedGraph.from_edges(self.n, items, self.labels)

    def without_edges(self, pairs: Iterable[Sequence]) -> "WeightedGraph":
        drop = {_norm_edge(int(p[0]), int(p[1])) for p in pairs}
        missing = drop - set(self._lookup)
        if missing:
            raise ValueError(f"edges not present: {sorted(missing)}")
        return WeightedGraph(self.n, tuple(e for e in self.edges if (e[0], e[1]) not in drop), self.labels)

    def relabel(self, perm: Sequence[int]) -> "WeightedGraph":
        """Graph with vertex ``u`` renamed ``perm[u]``."""
        perm = [int(p) for p in perm]
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        return WeightedGraph.from_edges(self.n, [(perm[u], perm[v], w) for u, v, w in self.edges])

    def induced(self, vertices: Sequence[int]) -> "WeightedGraph":
        """Induced subgraph, re-indexed in the order given."""
        index = {v: i for i, v in enumerate(vertices)}
        return WeightedGraph.from_edges(
            len(index),
            [(index[u], index[v], w) for u, v, w in self.edges if u in index and v in index],
        )

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        out = {"n": self.n, "edges": [[u, v, w] for u, v, w in self.edges]}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "WeightedGraph":
        if not isinstance(data, dict) or "n" not in data:
            raise ValueError("graph JSON must be an object with key 'n'")
        return cls.from_edges(int(data["n"]), data.get("edges", []), data.get("labels"))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "WeightedGraph":
        return cls.from_dict(json.loads(text))


def load_graph(path: Union[str, Path]) -> WeightedGraph:
    return WeightedGraph.from_json(Path(path).read_text())


def save_graph(g: WeightedGraph, path: Union[str, Path]) -> None:
    Path(path).write_text(g.to_json() + "\n")


def build_matrix(g: WeightedGraph, model: Union[Model, str]) -> np.ndarray:
    """Dense ``A``, ``L = D - A`` or ``Q = D + A`` of ``g``."""
    model = Model.parse(model)
    a = g.adjacency()
    if model is Model.A:
        return a
    m = model.zeta * a
    m[np.diag_indices(g.n)] = a.sum(axis=1)
    return m


# -- clusters --------------------------------------------------------------


@dataclass(frozen=True)
class Cluster:
    """Set ``C`` of false twins sharing the weighted neighborhood ``S``.

    ``z[k]`` is the weight between any vertex of ``C`` and ``S[k]``.
    """

    C: tuple[int, ...]
    S: tuple[int, ...]
    z: tuple[float, ...]

    @property
    def c(self) -> int:
        return len(self.C)

    @property
    def s(self) -> int:
        return len(self.S)

    def shift(self, model: Union[Model, str]) -> float:
        """Eigenvalue shift ``delta * sum(z)`` picked up by states inside ``C``."""
        return Model.parse(model).delta * float(sum(self.z))

    def validate(self, g: WeightedGraph) -> None:
        """Raise ``ValueError`` unless this is a cluster of ``g``."""
        if len(self.C) < 2:
            raise ValueError("a cluster needs at least two vertices")
        if set(self.C) & set(self.S):
            raise ValueError("C and S must be disjoint")
        if len(self.S) != len(self.z):
            raise ValueError("z must be indexed by S")
        nbrs = g.neighborhoods()
        for u in self.C:
            if set(nbrs[u]) != set(self.S):
                raise ValueError(f"vertex {u} does not have neighborhood S")
            for v, zv in zip(self.S, self.z):
                if not math.isclose(nbrs[u][v], zv, rel_tol=WEIGHT_RTOL):
                    raise ValueError(f"weight of ({u}, {v}) differs from z")


def detect_clusters(g: WeightedGraph) -> list[Cluster]:
    """All maximal classes of false twins with matching edge weights.

    Vertices with equal open neighborhoods are never adjacent (that would
    need a loop), so grouping by neighborhood gives exactly the false twins.
    Isolated vertices form a class with empty ``S``.
    """
    nbrs = g.neighborhoods()
    by_support: dict[tuple[int, ...], list[int]] = {}
    for u in range(g.n):
        by_support.setdefault(tuple(sorted(nbrs[u])), []).append(u)

    found = []
    for support, members in by_support.items():
        if len(members) < 2:
            continue
        classes: list[list[int]] = []
        for u in members:
            for cls in classes:
                rep = cls[0]
                if all(math.isclose(nbrs[u][v], nbrs[rep][v], rel_tol=WEIGHT_RTOL) for v in support):
                    cls.append(u)
                    break
            else:
                classes.append([u])
        for cls in classes:
            if len(cls) >= 2:
                z = tuple(nbrs[cls[0]][v] for v in support)
                found.append(Cluster(tuple(cls), support, z))
    found.sort(key=lambda cl: cl.C[0])
    return found


def cluster_of(g: WeightedGraph, vertices: Sequence[int]) -> Cluster:
    """The cluster on exactly ``vertices`` (any subset of a twin class with equal weights)."""
    chosen = tuple(int(v) for v in vertices)
    for cl in detect_clusters(g):
        if set(chosen) <= set(cl.C):
            return Cluster(chosen, cl.S, cl.z)
    raise ValueError(f"vertices {list(chosen)} are not false twins with equal weights")


# -- states ----------------------------------------------------------------

GraphOrOrder = Union[WeightedGraph, int]


def _order(g: GraphOrOrder) -> int:
    return g.n if isinstance(g, WeightedGraph) else int(g)


def _check_vertex(n: int, *vertices: int) -> None:
    for v in vertices:
        if not (0 <= v < n):
            raise ValueError(f"vertex {v} out of range for n={n}")


@dataclass(frozen=True, eq=False)
class RealPureState:
    """Unit real vector on the vertex space, tagged by how it was made."""

    vec: np.ndarray
    kind: str = "general"

    def __post_init__(self):
        vec = np.array(self.vec, dtype=float).reshape(-1)
        if not np.isclose(np.linalg.norm(vec), 1.0, rtol=0.0, atol=NORM_TOL):
            raise ValueError(f"state must have unit norm, got {np.linalg.norm(vec)!r}")
        vec.setflags(write=False)
        object.__setattr__(self, "vec", vec)

    @classmethod
    def from_vector(cls, values: Sequence[float], kind: str = "general") -> "RealPureState":
        """Normalize ``values`` into a state."""
        vec = np.asarray(values, dtype=float).reshape(-1)
        norm = np.linalg.norm(vec)
        if norm == 0:
            raise ValueError("zero vector is not a state")
        return cls(vec / norm, kind)

    @property
    def n(self) -> int:
        return self.vec.shape[0]

    def __array__(self, dtype=None, copy=None):
        return self.vec if dtype is None else self.vec.astype(dtype)

    def __neg__(self) -> "RealPureState":
        return RealPureState(-self.vec, self.kind)

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"RealPureState(kind={self.kind!r}, vec={np.array2string(self.vec, precision=4)})"


def vertex_state(g: GraphOrOrder, a: int) -> RealPureState:
    n = _order(g)
    _check_vertex(n, a)
    vec = np.zeros(n)
    vec[a] = 1.0
    return RealPureState(vec, "vertex")


def pair_state(g: GraphOrOrder, a: int, b: int) -> RealPureState:
    """``(e_a - e_b) / sqrt(2)``."""
    n = _order(g)
    _check_vertex(n, a, b)
    if a == b:
        raise ValueError("pair state needs two distinct vertices")
    vec = np.zeros(n)
    vec[a] = 1.0 / math.sqrt(2.0)
    vec[b] = -1.0 / math.sqrt(2.0)
    return RealPureState(vec, "pair")


def s_pair_state(g: GraphOrOrder, a: int, b: int, s: float) -> RealPureState:
    """``(e_a + s e_b) / sqrt(1 + s^2)`` for real ``s != 0``."""
    n = _order(g)
    _check_vertex(n, a, b)
    if a == b:
        raise ValueError("s-pair state needs two distinct vertices")
    if s == 0:
        raise ValueError("s must be nonzero")
    scale = 1.0 / math.sqrt(1.0 + s * s)
    vec = np.zeros(n)
    vec[a] = scale
    vec[b] = s * scale
    return RealPureState(vec, "s-pair")


def lift_state(x, vertices: Sequence[int], n: int) -> RealPureState:
    """Embed a state on ``len(vertices)`` coordinates into ``R^n``, zero elsewhere."""
    small = as_vector(x)
    if small.shape[0] != len(vertices):
        raise ValueError("state length does not match the vertex list")
    vec = np.zeros(n)
    vec[list(vertices)] = small
    kind = x.kind if isinstance(x, RealPureState) else "general"
    return RealPureState(vec, kind)


def as_vector(x) -> np.ndarray:
    if isinstance(x, RealPureState):
        return x.vec
    return np.asarray(x)
