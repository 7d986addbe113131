"""Walk-regularity and permutation structure of ``U(tau)``.

``extract_permutation`` works for any graph. Walk-regularity is reported as
context only: it is implied by, but weaker than, membership in a homogeneous
coherent algebra, which is not decided here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph_core import RealPureState, WeightedGraph, s_pair_state
from .spectral import SpectralDecomposition

PERM_TOL = 1e-7


def is_walk_regular(g: WeightedGraph, tol: float = 1e-9) -> bool:
    """True iff every power of the adjacency matrix has constant diagonal."""
    if not g.is_unweighted:
        raise ValueError("walk-regularity is checked on unweighted graphs only")
    a = g.adjacency()
    power = a.copy()
    for _ in range(2, g.n):
        power = power @ a
        diag = np.diag(power)
        if np.max(diag) - np.min(diag) > tol * max(1.0, float(np.max(np.abs(diag)))):
            return False
    return True


@dataclass(frozen=True)
class PermutationCertificate:
    """``U(tau) = gamma P`` for the permutation matrix of ``perm`` (``P e_u = e_{perm[u]}``)."""

    tau: float
    gamma: complex
    perm: tuple[int, ...]
    order2: bool
    fixed_point_free: bool
    residual: float

    def to_dict(self) -> dict:
        return {
            "tau": self.tau,
            "gamma": {"re": float(self.gamma.real), "im": float(self.gamma.imag)},
            "perm": list(self.perm),
            "order2": self.order2,
            "fixed_point_free": self.fixed_point_free,
            "residual": self.residual,
        }


def extract_permutation(dec: SpectralDecomposition, tau: float, tol: float = PERM_TOL) -> Optional[PermutationCertificate]:
    """Certificate when ``U(tau)`` is a unit scalar times a permutation matrix, else ``None``."""
    if tau <= 0:
        raise ValueError("tau must be positive")
    u = dec.transition_matrix(tau)  # column j is U(tau) e_j
    n = u.shape[0]
    rows = np.argmax(np.abs(u), axis=0)
    perm = tuple(int(r) for r in rows)
    if sorted(perm) != list(range(n)):
        return None
    gamma = complex(u[rows[0], 0])
    if abs(abs(gamma) - 1.0) > tol:
        return None
    gamma /= abs(gamma)
    target = np.zeros((n, n), dtype=complex)
    target[rows, np.arange(n)] = gamma
    residual = float(np.max(np.abs(u - target)))
    if residual > tol:
        return None
    order2 = all(perm[perm[v]] == v for v in range(n))
    fixed_point_free = all(perm[v] != v for v in range(n))
    return PermutationCertificate(tau, gamma, perm, order2, fixed_point_free, residual)


def s_pair_transfer(cert: PermutationCertificate, a: int, b: int, s: float) -> tuple[RealPureState, RealPureState]:
    """Source and target s-pair states moved by the permutation of ``cert``.

    The target is built on ``perm[a], perm[b]``; ``check_pst_at`` at
    ``cert.tau`` should then report PST with phase ``cert.gamma``.
    """
    if not (cert.order2 and cert.fixed_point_free):
        raise ValueError("permutation must be a fixed-point-free involution")
    if cert.perm[a] == b:
        raise ValueError(f"vertices {a} and {b} already exchange states under the permutation")
    n = len(cert.perm)
    return s_pair_state(n, a, b, s), s_pair_state(n, cert.perm[a], cert.perm[b], s)
