"""Continuous-time quantum walks on weighted graphs with clusters.

Builds graphs (cluster attachments, joins, products, coronas, blow-ups),
evolves real pure states under the adjacency, Laplacian or signless
Laplacian Hamiltonian, and certifies perfect state transfer, strong
cospectrality, periodicity and related properties.
"""

from .coherent import PermutationCertificate, extract_permutation, is_walk_regular, s_pair_transfer
from .constructions import (
    AttachmentPlan,
    antipode,
    attach,
    blow_up,
    cartesian,
    complement,
    complete_bipartite,
    complete_graph,
    complete_minus_cycle,
    complete_minus_matching,
    cycle_graph,
    disjoint_union,
    edge_corona,
    empty_graph,
    join,
    lexicographic,
    neighborhood_corona,
    path_graph,
    sequential_join,
    star_graph,
    vertex_corona,
)
from .graph_core import (
    MODELS,
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
from .spectral import (
    SpectralDecomposition,
    Support,
    decompose,
    eigendecompose,
    evolve,
    fidelity,
    fidelity_curve,
    is_fixed,
    support,
)
from .transfer import (
    PgstEvidence,
    SedentaryEstimate,
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

__version__ = "0.1.0"
