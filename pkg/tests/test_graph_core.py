import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import random_weighted, seeds
from pairwalk.constructions import complete_bipartite, cycle_graph, path_graph, star_graph
from pairwalk.graph_core import (
    Cluster,
    Model,
    RealPureState,
    WeightedGraph,
    build_matrix,
    cluster_of,
    detect_clusters,
    lift_state,
    load_graph,
    pair_state,
    s_pair_state,
    save_graph,
    vertex_state,
)


def test_model_constants():
    assert (Model.A.zeta, Model.A.delta) == (1, 0)
    assert (Model.L.zeta, Model.L.delta) == (-1, 1)
    assert (Model.Q.zeta, Model.Q.delta) == (1, 1)
    assert Model.parse("l") is Model.L
    assert Model.parse(Model.Q) is Model.Q
    with pytest.raises(ValueError):
        Model.parse("X")


def test_from_edges_normalizes_and_defaults_weight():
    g = WeightedGraph.from_edges(3, [(2, 0), (1, 2, 3.0)])
    assert g.edges == ((0, 2, 1.0), (1, 2, 3.0))
    assert g.weight(2, 1) == 3.0
    assert g.weight(0, 1) == 0.0
    assert not g.is_unweighted


@pytest.mark.parametrize(
    "n, edges",
    [
        (0, []),
        (2, [(0, 0)]),
        (2, [(0, 1), (1, 0)]),
        (2, [(0, 2)]),
        (2, [(0, 1, -1.0)]),
        (2, [(0, 1, 0.0)]),
        (2, [(0, 1, float("nan"))]),
    ],
)
def test_invalid_graphs_rejected(n, edges):
    with pytest.raises(ValueError):
        WeightedGraph.from_edges(n, edges)


def test_path_matrices():
    g = path_graph(3)
    a = build_matrix(g, "A")
    assert np.array_equal(a, [[0, 1, 0], [1, 0, 1], [0, 1, 0]])
    assert np.array_equal(build_matrix(g, "L"), [[1, -1, 0], [-1, 2, -1], [0, -1, 1]])
    assert np.array_equal(build_matrix(g, "Q"), [[1, 1, 0], [1, 2, 1], [0, 1, 1]])


def test_weighted_laplacian_rows_sum_to_zero():
    g = WeightedGraph.from_edges(3, [(0, 1, 2.5), (1, 2, 0.5)])
    lap = build_matrix(g, Model.L)
    assert np.allclose(lap.sum(axis=1), 0)
    assert lap[1, 1] == 3.0


@given(seeds)
def test_model_matrices_relations(seed):
    g = random_weighted(seed)
    a, lap, q = (build_matrix(g, m) for m in "ALQ")
    deg = np.diag(g.degrees())
    assert np.array_equal(a, a.T)
    assert np.allclose(lap, deg - a, atol=1e-12)
    assert np.allclose(q, deg + a, atol=1e-12)
    assert np.allclose(lap @ np.ones(g.n), 0, atol=1e-12)


@given(seeds)
def test_json_round_trip(seed):
    g = random_weighted(seed)
    assert WeightedGraph.from_json(g.to_json()) == g
    data = json.loads(g.to_json())
    assert data["n"] == g.n


def test_save_and_load(tmp_path):
    g = cycle_graph(5)
    path = tmp_path / "c5.json"
    save_graph(g, path)
    assert load_graph(path) == g


def test_relabel_and_induced():
    g = path_graph(3)
    h = g.relabel([2, 1, 0])
    assert h.edge_set() == g.edge_set()
    sub = star_graph(3).induced([0, 2, 3])
    assert sub.n == 3 and sub.num_edges == 2


def test_detect_clusters_on_star_and_bipartite():
    # leaves of a star are false twins
    (cl,) = detect_clusters(star_graph(4))
    assert cl.C == (1, 2, 3, 4) and cl.S == (0,) and cl.z == (1.0,)
    clusters = detect_clusters(complete_bipartite(2, 3))
    assert [c.C for c in clusters] == [(0, 1), (2, 3, 4)]


def test_detect_clusters_splits_by_weight():
    g = WeightedGraph.from_edges(4, [(0, 3, 1.0), (1, 3, 1.0), (2, 3, 2.0)])
    (cl,) = detect_clusters(g)
    assert cl.C == (0, 1)
    assert cl.shift(Model.L) == 1.0 and cl.shift(Model.A) == 0.0


def test_cluster_validation_and_subset():
    g = star_graph(4)
    cl = cluster_of(g, [2, 4])
    assert cl == Cluster((2, 4), (0,), (1.0,))
    cl.validate(g)
    with pytest.raises(ValueError):
        cluster_of(g, [0, 1])
    with pytest.raises(ValueError):
        Cluster((1,), (0,), (1.0,)).validate(g)
    with pytest.raises(ValueError):
        Cluster((1, 2), (0,), (2.0,)).validate(g)


def test_states():
    x = pair_state(4, 0, 2)
    assert np.allclose(x.vec, np.array([1, 0, -1, 0]) / math.sqrt(2))
    assert x.kind == "pair"
    assert np.allclose(vertex_state(3, 1).vec, [0, 1, 0])
    s = s_pair_state(3, 0, 1, 2.0)
    assert np.allclose(s.vec, np.array([1, 2, 0]) / math.sqrt(5))
    assert np.allclose((-x).vec, -x.vec)
    with pytest.raises(ValueError):
        pair_state(3, 1, 1)
    with pytest.raises(ValueError):
        s_pair_state(3, 0, 1, 0.0)
    with pytest.raises(ValueError):
        vertex_state(3, 3)
    with pytest.raises(ValueError):
        RealPureState(np.array([1.0, 1.0]))


def test_state_is_read_only():
    x = vertex_state(2, 0)
    with pytest.raises(ValueError):
        x.vec[0] = 5.0


@given(seeds, st.integers(min_value=2, max_value=6))
def test_lift_state_preserves_norm(seed, c):
    rng = np.random.default_rng(seed)
    v = rng.normal(size=c)
    small = RealPureState.from_vector(v)
    verts = sorted(rng.choice(10, size=c, replace=False).tolist())
    big = lift_state(small, verts, 10)
    assert np.isclose(np.linalg.norm(big.vec), 1.0)
    assert np.allclose(big.vec[verts], small.vec)
