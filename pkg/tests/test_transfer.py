import itertools
import json
import math
import warnings

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import random_unit, random_weighted, seeds
from pairwalk import constructions as cons
from pairwalk.graph_core import Model, WeightedGraph, pair_state, vertex_state
from pairwalk.instances import known_transfers, random_cluster_instance
from pairwalk.spectral import decompose, fidelity
from pairwalk.transfer import (
    DEAD_ZONE,
    TransferCertificate,
    Verdict,
    check_pst_at,
    find_pst,
    has_pst,
    is_periodic,
    pgst_evidence,
    sedentariness,
    strong_cospectral,
)

HALF_PI = math.pi / 2
KNOWN = known_transfers()


def positive_instance(seed: int):
    """A random cluster instance built around a graph with known pair PST."""
    rng = np.random.default_rng(seed)
    known = KNOWN[int(rng.integers(len(KNOWN)))]
    model = known.models[int(rng.integers(len(known.models)))]
    inst = random_cluster_instance(rng, model, inner=known.h)
    return known, inst, model


# -- strong cospectrality ----------------------------------------------------


def test_c4_sign_map():
    dec = decompose(cons.cycle_graph(4), "A")
    signs = strong_cospectral(dec, pair_state(4, 0, 1), pair_state(4, 3, 2))
    assert signs is not None
    keys = sorted(signs)
    assert np.allclose(keys, [-2, 0])
    # relative sign between the two eigenvalues is negative
    assert signs[keys[0]] * signs[keys[1]] == -1


def test_fixed_states_are_not_strongly_cospectral():
    for model in Model:
        dec = decompose(cons.complete_graph(5), model)
        assert strong_cospectral(dec, pair_state(5, 0, 1), pair_state(5, 2, 3)) is None


def test_k4_minus_edge_cross_pairs_not_strongly_cospectral():
    # the removed edge is {0, 1}
    dec = decompose(cons.complete_minus_matching(4, 1), "L")
    assert strong_cospectral(dec, pair_state(4, 0, 2), pair_state(4, 1, 3)) is None


def test_strong_cospectral_rejects_parallel_states():
    dec = decompose(cons.cycle_graph(4), "A")
    x = pair_state(4, 0, 1)
    with pytest.raises(ValueError):
        strong_cospectral(dec, x, -x)


# -- check_pst_at -------------------------------------------------------------


def test_k2_vertex_transfer_phase_i():
    cert = check_pst_at(decompose(cons.complete_graph(2), "A"), vertex_state(2, 0), vertex_state(2, 1), HALF_PI)
    assert cert.verdict is Verdict.PST
    assert cert.gamma == pytest.approx(1j, abs=1e-12)
    assert abs(abs(cert.gamma) - 1) <= 1e-9


def test_path_laplacian_phase_minus_i():
    cert = check_pst_at(decompose(cons.path_graph(3), "L"), pair_state(3, 0, 1), pair_state(3, 2, 1), HALF_PI)
    assert cert.verdict is Verdict.PST
    assert cert.gamma == pytest.approx(-1j, abs=1e-9)
    assert cert.phase_over_pi == pytest.approx(-0.5)


def test_self_transfer_at_tiny_time_is_periodic_not_pst():
    g = random_weighted(3)
    x = random_unit(3, g.n)
    cert = check_pst_at(decompose(g, "A"), x, x, DEAD_ZONE, tol=1e-6)
    assert cert.verdict is Verdict.PERIODIC


def test_check_pst_rejects_nonpositive_time():
    with pytest.raises(ValueError):
        check_pst_at(decompose(cons.complete_graph(2), "A"), vertex_state(2, 0), vertex_state(2, 1), 0.0)


def test_phase_mismatch_reported_at_wrong_time():
    dec = decompose(cons.cycle_graph(4), "A")
    cert = check_pst_at(dec, pair_state(4, 0, 1), pair_state(4, 3, 2), 1.0)
    assert cert.verdict is Verdict.PHASE_MISMATCH
    assert cert.residual > 0.01


def test_certificate_json():
    dec = decompose(cons.cycle_graph(4), "L")
    cert = find_pst(dec, pair_state(4, 0, 1), pair_state(4, 3, 2))[0]
    data = json.loads(json.dumps(cert.to_dict()))
    assert set(data) >= {"verdict", "tau", "gamma", "sign_map", "residual"}
    assert data["verdict"] == "PST"
    assert set(data["gamma"]) >= {"re", "im"}
    assert all(len(item) == 2 and item[1] in (-1, 1) for item in data["sign_map"])


# -- find_pst -----------------------------------------------------------------


@pytest.mark.parametrize("model", list(Model))
def test_find_pst_c4_all_times(model):
    certs = find_pst(decompose(cons.cycle_graph(4), model), pair_state(4, 0, 1), pair_state(4, 3, 2))
    assert [c.tau for c in certs] == pytest.approx([HALF_PI, 3 * HALF_PI, 5 * HALF_PI, 7 * HALF_PI])
    assert all(c.verdict is Verdict.PST for c in certs)


@pytest.mark.parametrize("model", list(Model))
def test_find_pst_matching_removal(model):
    g = cons.complete_minus_matching(6, 2)
    certs = find_pst(decompose(g, model), pair_state(6, 0, 2), pair_state(6, 1, 3))
    assert certs[0].tau == pytest.approx(HALF_PI)


def test_find_pst_complete_graph_negative():
    (cert,) = find_pst(decompose(cons.complete_graph(5), "A"), pair_state(5, 0, 1), pair_state(5, 2, 3))
    assert cert.verdict is Verdict.NOT_STRONGLY_COSPECTRAL
    assert cert.note == "fixed state"
    assert not has_pst([cert])


def test_find_pst_phase_mismatch_branch():
    # P4 under A: end vertices are strongly cospectral but never exchange
    g = cons.path_graph(4)
    (cert,) = find_pst(decompose(g, "A"), vertex_state(4, 0), vertex_state(4, 3))
    assert cert.verdict in (Verdict.PHASE_MISMATCH, Verdict.INCONCLUSIVE)
    # P3 under A: PST at pi/sqrt2, eigenvalue differences are irrational multiples
    g = cons.path_graph(3)
    certs = find_pst(decompose(g, "A"), vertex_state(3, 0), vertex_state(3, 2))
    assert certs[0].verdict is Verdict.PST
    assert certs[0].tau == pytest.approx(math.pi / math.sqrt(2), abs=1e-9)


def test_find_pst_numeric_branch_on_irrational_gaps():
    # K_8 minus C_8 with pairs two apart: support differences sqrt2 and 2 sqrt2
    g = cons.complete_minus_cycle(8, 3)
    certs = find_pst(decompose(g, "A"), pair_state(8, 0, 2), pair_state(8, 4, 6))
    assert certs[0].verdict is Verdict.PST
    assert certs[0].tau == pytest.approx(math.pi / math.sqrt(2), abs=1e-7)
    assert certs[0].residual <= 1e-7


def test_integer_branch_reports_time_beyond_window():
    dec = decompose(cons.cycle_graph(4), "A")
    (cert,) = find_pst(dec, pair_state(4, 0, 1), pair_state(4, 3, 2), window=1.0)
    assert cert.verdict is Verdict.INCONCLUSIVE


def test_weighted_cycle_transfer_time_scales():
    g = WeightedGraph.from_edges(4, [(u, (u + 1) % 4, 2.0) for u in range(4)])
    certs = find_pst(decompose(g, "L"), pair_state(4, 0, 1), pair_state(4, 3, 2))
    assert certs[0].tau == pytest.approx(math.pi / 4)


# -- periodicity and sedentariness -------------------------------------------


def test_periodicity_examples():
    k2 = decompose(cons.complete_graph(2), "L")
    tau, gamma = is_periodic(k2, vertex_state(2, 0))
    assert tau == pytest.approx(math.pi) and gamma == pytest.approx(1.0)
    c4 = decompose(cons.cycle_graph(4), "A")
    tau, _ = is_periodic(c4, pair_state(4, 0, 1))
    assert tau == pytest.approx(math.pi)
    fixed = decompose(cons.complete_graph(4), "A")
    tau, gamma = is_periodic(fixed, pair_state(4, 0, 1))
    assert DEAD_ZONE <= tau < 0.01
    assert gamma == pytest.approx(np.exp(-1j * tau))


def test_sedentariness_examples():
    k2 = decompose(cons.complete_graph(2), "A")
    est = sedentariness(k2, vertex_state(2, 0), math.pi)
    assert est.estimate == pytest.approx(0.0, abs=1e-9)
    assert est.argmin == pytest.approx(HALF_PI, abs=1e-6)
    fixed = decompose(cons.complete_graph(4), "A")
    assert sedentariness(fixed, pair_state(4, 0, 1), 10.0).estimate == pytest.approx(1.0)
    c4 = decompose(cons.cycle_graph(4), "A")
    assert sedentariness(c4, pair_state(4, 0, 1), math.pi).estimate <= 1e-6


# -- PGST evidence ------------------------------------------------------------


def test_pgst_evidence_on_exact_transfer():
    dec = decompose(cons.cycle_graph(4), "A")
    ev = pgst_evidence(dec, pair_state(4, 0, 1), pair_state(4, 3, 2), 20.0, samples=2000)
    assert ev.sup_fidelity == pytest.approx(1.0, abs=1e-9)
    assert ev.to_dict()["evidence_threshold"] == 0.9


def test_pgst_evidence_fixed_state_does_not_grow():
    dec = decompose(cons.complete_graph(4), "A")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        ev = pgst_evidence(dec, pair_state(4, 0, 1), pair_state(4, 2, 3), 100.0, samples=2000)
    assert caught
    assert ev.sup_fidelity <= 1e-9
    assert not ev.strongly_cospectral


def test_pgst_evidence_is_monotone_with_previous():
    g = cons.complete_minus_cycle(8, 3)
    dec = decompose(g, "A")
    x, y = pair_state(8, 0, 1), pair_state(8, 4, 5)
    first = pgst_evidence(dec, x, y, 200.0, samples=20_000)
    second = pgst_evidence(dec, x, y, 400.0, samples=40_000, previous=first)
    assert second.sup_fidelity >= first.sup_fidelity


# -- properties over random instances with a known transfer ------------------


@given(seeds)
def test_pst_implies_strong_cospectrality_and_periodicity(seed):
    known, inst, model = positive_instance(seed)
    dec = decompose(inst.graph, model)
    x, y = inst.lift(known.x), inst.lift(known.y)
    cert = check_pst_at(dec, x, y, known.tau)
    assert cert.verdict is Verdict.PST
    assert strong_cospectral(dec, x, y) is not None
    assert check_pst_at(dec, x, x, 2 * known.tau).verdict is Verdict.PERIODIC


@given(seeds)
def test_monogamy_at_fixed_time(seed):
    known, inst, model = positive_instance(seed)
    dec = decompose(inst.graph, model)
    x, y = inst.lift(known.x), inst.lift(known.y)
    targets = [pair_state(inst.graph.n, a, b) for a, b in itertools.combinations(range(inst.graph.n), 2)]
    hits = [z for z in targets if fidelity(dec, known.tau, x, z) >= 1 - 1e-9]
    assert hits
    for z in hits:
        assert abs(abs(float(np.dot(z.vec, y.vec))) - 1) <= 1e-6


@given(seeds)
def test_cluster_certificates_agree(seed):
    known, inst, model = positive_instance(seed)
    h_cert = find_pst(decompose(known.h, model), known.x, known.y)[0]
    g_cert = find_pst(decompose(inst.graph, model), inst.lift(known.x), inst.lift(known.y))[0]
    assert g_cert.verdict == h_cert.verdict
    assert g_cert.tau == pytest.approx(h_cert.tau, abs=1e-8)
    assert g_cert.gamma == pytest.approx(np.exp(1j * h_cert.tau * inst.shift) * h_cert.gamma, abs=1e-8)


@given(seeds)
def test_regular_inner_graph_transfers_under_every_model(seed):
    rng = np.random.default_rng(seed)
    regular = [k for k in KNOWN if cons.is_regular(k.h)]
    known = regular[int(rng.integers(len(regular)))]
    inst = random_cluster_instance(rng, Model.A, inner=known.h)
    for model in Model:
        cert = check_pst_at(decompose(inst.graph, model), inst.lift(known.x), inst.lift(known.y), known.tau)
        assert cert.verdict is Verdict.PST


@given(seeds, st.sampled_from(list(Model)))
def test_random_states_verdict_invariant_under_attachment(seed, model):
    rng = np.random.default_rng(seed)
    inst = random_cluster_instance(rng, model, n_max=8)
    c = inst.inner.n
    x = rng.normal(size=c)
    x -= x.mean()
    y = rng.normal(size=c)
    y -= y.mean()
    x, y = x / np.linalg.norm(x), y / np.linalg.norm(y)
    v_h = find_pst(decompose(inst.inner, model), x, y)[0].verdict
    v_g = find_pst(decompose(inst.graph, model), inst.lift(x), inst.lift(y))[0].verdict
    assert v_h == v_g


def test_certificate_defaults():
    cert = TransferCertificate(Verdict.INCONCLUSIVE)
    assert not cert.positive and cert.phase_over_pi is None
