"""Eigenprojections, supports and evolution of states under ``U(t) = exp(itM)``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from .graph_core import Model, WeightedGraph, as_vector, build_matrix

GROUPING_TOL = 1e-8
SUPPORT_THRESHOLD = 1e-8
# support norms within this factor of the threshold are flagged as borderline
BORDERLINE_FACTOR = 100.0


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Distinct eigenvalues ``λ_1 < ... < λ_r`` with orthogonal projections ``E_k``."""

    eigenvalues: np.ndarray
    projections: np.ndarray  # shape (r, n, n)
    scale: float
    model: Optional[Model] = None
    multiplicities: tuple[int, ...] = field(default=())

    @property
    def n(self) -> int:
        return self.projections.shape[1]

    @property
    def r(self) -> int:
        return len(self.eigenvalues)

    def reconstruct(self) -> np.ndarray:
        return np.einsum("k,kij->ij", self.eigenvalues, self.projections)

    def transition_matrix(self, t: float) -> np.ndarray:
        """Dense ``U(t)``."""
        return np.einsum("k,kij->ij", np.exp(1j * t * self.eigenvalues), self.projections)

    def spectrum_table(self) -> list[tuple[float, int]]:
        return list(zip(self.eigenvalues.tolist(), self.multiplicities))


def eigendecompose(matrix, grouping_tol: float = GROUPING_TOL, model: Optional[Model] = None) -> SpectralDecomposition:
    """Group the eigenvalues of a real symmetric matrix and build projections.

    Consecutive eigenvalues closer than ``grouping_tol * max(1, scale)`` fall
    in the same group; the group is represented by its mean.
    """
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    scale_in = max(1.0, float(np.max(np.abs(m))) if m.size else 1.0)
    if not np.allclose(m, m.T, rtol=0.0, atol=1e-12 * scale_in):
        raise ValueError("matrix must be symmetric")
    try:
        vals, vecs = np.linalg.eigh((m + m.T) / 2.0)
    except np.linalg.LinAlgError as exc:
        raise RuntimeError(f"eigendecomposition failed to converge: {exc}") from exc

    scale = float(np.max(np.abs(vals))) if vals.size else 0.0
    gap = grouping_tol * max(1.0, scale)
    groups: list[list[int]] = [[0]]
    for k in range(1, len(vals)):
        if vals[k] - vals[k - 1] < gap:
            groups[-1].append(k)
        else:
            groups.append([k])

    eigenvalues = np.array([vals[g].mean() for g in groups])
    projections = np.stack([vecs[:, g] @ vecs[:, g].T for g in groups])
    eigenvalues.setflags(write=False)
    projections.setflags(write=False)
    return SpectralDecomposition(eigenvalues, projections, scale, model, tuple(len(g) for g in groups))


def decompose(g: WeightedGraph, model: Union[Model, str], grouping_tol: float = GROUPING_TOL) -> SpectralDecomposition:
    """Spectral decomposition of ``M(g)``."""
    model = Model.parse(model)
    return eigendecompose(build_matrix(g, model), grouping_tol, model)


@dataclass(frozen=True)
class Support:
    """Eigenvalues whose projections do not annihilate a state."""

    indices: tuple[int, ...]
    eigenvalues: tuple[float, ...]
    norms: tuple[float, ...]
    borderline: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, value: float) -> bool:
        return any(abs(value - lam) <= 1e-8 * max(1.0, abs(lam)) for lam in self.eigenvalues)


def projection_norms(dec: SpectralDecomposition, x) -> np.ndarray:
    vec = as_vector(x)
    return np.linalg.norm(dec.projections @ vec, axis=1)


def support(dec: SpectralDecomposition, x, threshold: float = SUPPORT_THRESHOLD) -> Support:
    vec = as_vector(x)
    if vec.shape[0] != dec.n:
        raise ValueError(f"state has length {vec.shape[0]}, graph has {dec.n} vertices")
    norms = projection_norms(dec, vec)
    idx = tuple(int(k) for k in np.flatnonzero(norms > threshold))
    borderline = tuple(
        int(k) for k in np.flatnonzero((norms > threshold / BORDERLINE_FACTOR) & (norms < threshold * BORDERLINE_FACTOR))
    )
    return Support(
        idx,
        tuple(float(dec.eigenvalues[k]) for k in idx),
        tuple(float(norms[k]) for k in idx),
        borderline,
    )


def is_fixed(dec: SpectralDecomposition, x) -> bool:
    """True when ``x`` is an eigenvector, i.e. its support is a single eigenvalue."""
    return len(support(dec, x)) == 1


def evolve(dec: SpectralDecomposition, t: float, x) -> np.ndarray:
    """``U(t) x`` as a complex vector."""
    vec = as_vector(x)
    if vec.shape[0] != dec.n:
        raise ValueError(f"state has length {vec.shape[0]}, graph has {dec.n} vertices")
    components = dec.projections @ vec  # (r, n)
    return np.exp(1j * t * dec.eigenvalues) @ components


def amplitude(dec: SpectralDecomposition, t, x, y) -> np.ndarray:
    """``y^T U(t) x`` for a scalar or an array of times."""
    coeffs = overlap_coefficients(dec, x, y)
    times = np.asarray(t, dtype=float)
    return np.exp(1j * np.multiply.outer(times, dec.eigenvalues)) @ coeffs


def overlap_coefficients(dec: SpectralDecomposition, x, y) -> np.ndarray:
    """``y^T E_k x`` for every eigenvalue."""
    xv, yv = as_vector(x), as_vector(y)
    return (dec.projections @ xv) @ yv


def fidelity(dec: SpectralDecomposition, t: float, x, y) -> float:
    """``|y^T U(t) x|``."""
    return float(abs(amplitude(dec, t, x, y)))


def fidelity_curve(dec: SpectralDecomposition, times: Sequence[float], x, y, chunk: int = 200_000) -> np.ndarray:
    """Vectorized fidelity over many times, evaluated in chunks to bound memory."""
    times = np.asarray(times, dtype=float)
    coeffs = overlap_coefficients(dec, x, y)
    keep = np.abs(coeffs) > 0
    lam = dec.eigenvalues[keep]
    cf = coeffs[keep]
    out = np.empty(times.shape[0])
    for start in range(0, times.shape[0], chunk):
        part = times[start:start + chunk]
        out[start:start + chunk] = np.abs(np.exp(1j * np.multiply.outer(part, lam)) @ cf)
    return out
