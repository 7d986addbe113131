import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pairwalk import constructions as cons
from pairwalk.coherent import extract_permutation, is_walk_regular, s_pair_transfer
from pairwalk.graph_core import Model, WeightedGraph, build_matrix
from pairwalk.oracle import expm_series
from pairwalk.spectral import decompose
from pairwalk.transfer import Verdict, check_pst_at

HALF_PI = math.pi / 2


def test_walk_regularity():
    assert is_walk_regular(cons.cycle_graph(6))
    assert is_walk_regular(cons.cartesian(cons.complete_graph(2), cons.cycle_graph(4)))
    assert not is_walk_regular(cons.path_graph(3))
    assert not is_walk_regular(cons.star_graph(3))
    with pytest.raises(ValueError):
        is_walk_regular(WeightedGraph.from_edges(2, [(0, 1, 2.0)]))


def test_c4_permutation_matches_oracle():
    c4 = cons.cycle_graph(4)
    cert = extract_permutation(decompose(c4, "A"), HALF_PI)
    assert cert is not None
    assert cert.perm == (2, 3, 0, 1)
    assert cert.gamma == pytest.approx(-1)
    assert cert.order2 and cert.fixed_point_free
    oracle = expm_series(build_matrix(c4, "A"), HALF_PI)
    perm_matrix = np.zeros((4, 4))
    perm_matrix[list(cert.perm), range(4)] = 1
    assert np.allclose(oracle, cert.gamma * perm_matrix, atol=1e-12)


def test_no_permutation_at_generic_time():
    assert extract_permutation(decompose(cons.cycle_graph(4), "A"), math.pi / 4) is None
    assert extract_permutation(decompose(cons.path_graph(3), "L"), HALF_PI) is None
    with pytest.raises(ValueError):
        extract_permutation(decompose(cons.cycle_graph(4), "A"), 0.0)


def test_identity_permutation_is_not_fixed_point_free():
    cert = extract_permutation(decompose(cons.cycle_graph(4), "A"), math.pi)
    assert cert is not None and cert.perm == (0, 1, 2, 3)
    assert cert.order2 and not cert.fixed_point_free
    with pytest.raises(ValueError):
        s_pair_transfer(cert, 0, 1, 1.0)


@given(st.floats(min_value=-10, max_value=10).filter(lambda s: abs(s) > 1e-3), st.sampled_from(list(Model)))
def test_s_pair_transfer_for_any_s(s, model):
    dec = decompose(cons.cycle_graph(4), model)
    cert = extract_permutation(dec, HALF_PI)
    x, y = s_pair_transfer(cert, 0, 1, s)
    pst = check_pst_at(dec, x, y, HALF_PI)
    assert pst.verdict is Verdict.PST
    assert pst.gamma == pytest.approx(cert.gamma, abs=1e-9)


def test_s_pair_transfer_rejects_exchanged_pair():
    cert = extract_permutation(decompose(cons.cycle_graph(4), "A"), HALF_PI)
    with pytest.raises(ValueError):
        s_pair_transfer(cert, 0, 2, 1.0)


def test_hypercube_permutation():
    cube = cons.cartesian(cons.cartesian(cons.complete_graph(2), cons.complete_graph(2)), cons.complete_graph(2))
    cert = extract_permutation(decompose(cube, "A"), HALF_PI)
    assert cert is not None and cert.fixed_point_free and cert.order2
    assert cert.perm[0] == 7
    assert cert.to_dict()["perm"] == list(cert.perm)
