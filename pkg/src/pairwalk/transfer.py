"""Certification of perfect state transfer, periodicity and related properties.

A state ``x`` has PST to ``y`` at time ``tau`` when ``U(tau) x = gamma y`` for a
unit ``gamma``. Writing ``E_k x = s_k E_k y`` over the support of ``x`` (strong
cospectrality), this holds exactly when ``exp(i tau λ_k) s_k`` is the same for
every ``k``; that reduction drives the exact search used when the support
eigenvalues differ by integers.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.optimize import minimize_scalar

from .graph_core import as_vector
from .spectral import SpectralDecomposition, amplitude, fidelity_curve, support

SIGN_TOL = 1e-8
INTEGER_TOL = 1e-8
PST_TOL_EXACT = 1e-9
PST_TOL_NUMERIC = 1e-7
DEAD_ZONE = 1e-6
DEFAULT_WINDOW = 4 * math.pi
GRID_PER_PERIOD = 10_000
MAX_GRID = 2_000_000
# engineering choice, not a derived bound: sup fidelity above this counts as PGST evidence
PGST_EVIDENCE_THRESHOLD = 0.9


class Verdict(str, enum.Enum):
    PST = "PST"
    PERIODIC = "periodic"
    NOT_STRONGLY_COSPECTRAL = "not-strongly-cospectral"
    PHASE_MISMATCH = "phase-mismatch"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class TransferCertificate:
    verdict: Verdict
    tau: Optional[float] = None
    gamma: Optional[complex] = None
    sign_map: tuple[tuple[float, int], ...] = ()
    residual: float = 1.0
    note: str = ""

    @property
    def positive(self) -> bool:
        return self.verdict in (Verdict.PST, Verdict.PERIODIC)

    @property
    def signs(self) -> dict[float, int]:
        return dict(self.sign_map)

    @property
    def phase_over_pi(self) -> Optional[float]:
        """``arg(gamma) / pi`` in ``(-1, 1]``."""
        if self.gamma is None:
            return None
        return float(np.angle(self.gamma) / math.pi)

    def to_dict(self) -> dict:
        gamma = None
        if self.gamma is not None:
            gamma = {"re": float(self.gamma.real), "im": float(self.gamma.imag), "arg_over_pi": self.phase_over_pi}
        return {
            "verdict": self.verdict.value,
            "tau": self.tau,
            "gamma": gamma,
            "sign_map": [[lam, sgn] for lam, sgn in self.sign_map],
            "residual": self.residual,
            "note": self.note,
        }


def _parallel(x: np.ndarray, y: np.ndarray) -> bool:
    return abs(float(x @ y)) >= 1.0 - 1e-12


def _sign_map(dec: SpectralDecomposition, x: np.ndarray, y: np.ndarray, tol: float = SIGN_TOL) -> Optional[dict[int, int]]:
    """Signs ``s_k`` with ``E_k x = s_k E_k y`` over both supports, keyed by eigenvalue index."""
    indices = sorted(set(support(dec, x).indices) | set(support(dec, y).indices))
    px = dec.projections[indices] @ x
    py = dec.projections[indices] @ y
    signs = {}
    for k, ex, ey in zip(indices, px, py):
        if np.linalg.norm(ex - ey) <= tol:
            signs[k] = 1
        elif np.linalg.norm(ex + ey) <= tol:
            signs[k] = -1
        else:
            return None
    return signs


def _keyed(dec: SpectralDecomposition, signs: dict[int, int]) -> tuple[tuple[float, int], ...]:
    return tuple((float(dec.eigenvalues[k]), s) for k, s in sorted(signs.items()))


def strong_cospectral(dec: SpectralDecomposition, x, y, tol: float = SIGN_TOL) -> Optional[dict[float, int]]:
    """Sign map ``λ -> ±1`` with ``E_λ x = ±E_λ y``, or ``None`` if there is none.

    Fixed states (eigenvectors) are never strongly cospectral.
    """
    xv, yv = as_vector(x), as_vector(y)
    if _parallel(xv, yv):
        raise ValueError("strong cospectrality needs linearly independent states")
    if len(support(dec, xv)) == 1 or len(support(dec, yv)) == 1:
        return None
    signs = _sign_map(dec, xv, yv, tol)
    return None if signs is None else dict(_keyed(dec, signs))


def check_pst_at(dec: SpectralDecomposition, x, y, tau: float, tol: float = PST_TOL_EXACT) -> TransferCertificate:
    """Test ``|y^T U(tau) x| >= 1 - tol``; ``x`` parallel to ``y`` reports periodicity."""
    if tau <= 0:
        raise ValueError("transfer time must be positive")
    xv, yv = as_vector(x), as_vector(y)
    amp = complex(amplitude(dec, tau, xv, yv))
    fid = abs(amp)
    residual = max(0.0, 1.0 - fid)
    parallel = _parallel(xv, yv)

    fixed = len(support(dec, xv)) == 1
    if parallel:
        signs = _sign_map(dec, xv, yv)
    else:
        signs = None if fixed else _sign_map(dec, xv, yv)
    if signs is None:
        note = "fixed state" if fixed else "projections differ beyond sign"
        return TransferCertificate(Verdict.NOT_STRONGLY_COSPECTRAL, tau, None, (), residual, note)
    sign_map = _keyed(dec, signs)
    if fid >= 1.0 - tol:
        verdict = Verdict.PERIODIC if parallel else Verdict.PST
        return TransferCertificate(verdict, tau, amp / fid, sign_map, residual)
    return TransferCertificate(Verdict.PHASE_MISMATCH, tau, None, sign_map, residual)


def _integer_differences(lams: np.ndarray) -> Optional[np.ndarray]:
    diffs = lams - lams[0]
    rounded = np.rint(diffs)
    if np.all(np.abs(diffs - rounded) <= INTEGER_TOL):
        return rounded.astype(np.int64)
    return None


def _exact_times(diffs: np.ndarray, flips: np.ndarray, window: float) -> tuple[list[float], bool]:
    """Times ``pi p / g`` in ``(0, window]`` where every phase condition holds.

    ``diffs`` are integer eigenvalue offsets, ``flips[k]`` is 1 when the sign
    of component ``k`` differs from component 0. Returns the times and whether
    a solution exists at any time (the pattern repeats with period ``2g`` in p).
    """
    g = int(np.gcd.reduce(np.abs(diffs)))
    p_all = np.arange(1, 2 * g + 1)
    ok_all = np.all(((np.outer(p_all, diffs) // g) - flips) % 2 == 0, axis=1)
    exists = bool(ok_all.any())
    p_max = int(math.floor(window * g / math.pi + 1e-9))
    if not exists or p_max < 1:
        return [], exists
    p = np.arange(1, p_max + 1)
    ok = np.all(((np.outer(p, diffs) // g) - flips) % 2 == 0, axis=1)
    return [math.pi * int(q) / g for q in p[ok]], exists


def _refine_max(fun, lo: float, hi: float) -> tuple[float, float]:
    """Maximize ``fun`` on ``[lo, hi]``; returns ``(t, value)``."""
    res = minimize_scalar(lambda t: -fun(t), bounds=(lo, hi), method="bounded", options={"xatol": 1e-12})
    return float(res.x), float(-res.fun)


def _local_peaks(values: np.ndarray, floor: float) -> np.ndarray:
    inner = np.flatnonzero(
        (values[1:-1] >= values[:-2]) & (values[1:-1] >= values[2:]) & (values[1:-1] >= floor)
    ) + 1
    return inner


def find_pst(
    dec: SpectralDecomposition,
    x,
    y,
    window: float = DEFAULT_WINDOW,
    grid_per_period: int = GRID_PER_PERIOD,
    max_grid: int = MAX_GRID,
) -> list[TransferCertificate]:
    """Search ``(0, window]`` for PST from ``x`` to ``y``.

    Returns the positive certificates sorted by time, or a single negative
    certificate explaining why none was found. ``y`` parallel to ``x`` turns
    this into a periodicity search (times below ``DEAD_ZONE`` excluded).
    """
    xv, yv = as_vector(x), as_vector(y)
    parallel = _parallel(xv, yv)
    sup = support(dec, xv)
    if parallel:
        signs = _sign_map(dec, xv, yv)
    else:
        if strong_cospectral(dec, xv, yv) is None:
            note = "fixed state" if len(sup) == 1 else "not strongly cospectral"
            return [TransferCertificate(Verdict.NOT_STRONGLY_COSPECTRAL, None, None, (), 1.0, note)]
        signs = _sign_map(dec, xv, yv)
    sign_map = _keyed(dec, signs)
    idx = np.array(sup.indices)
    lams = dec.eigenvalues[idx]

    if len(idx) == 1:
        # eigenvector: periodic at every time
        tau = window / grid_per_period
        return [check_pst_at(dec, xv, yv, tau, PST_TOL_EXACT)]

    diffs = _integer_differences(lams)
    if diffs is not None:
        flips = np.array([0 if signs[k] == signs[idx[0]] else 1 for k in idx])
        times, exists = _exact_times(diffs, flips, window)
        certs = []
        for tau in times:
            if parallel and tau < DEAD_ZONE:
                continue
            cert = check_pst_at(dec, xv, yv, tau, PST_TOL_EXACT)
            if cert.positive:
                certs.append(cert)
        if certs:
            return certs
        if not exists:
            return [TransferCertificate(Verdict.PHASE_MISMATCH, None, None, sign_map, 1.0, "phases never align")]
        return [TransferCertificate(Verdict.INCONCLUSIVE, None, None, sign_map, 1.0, "first transfer time lies beyond the window")]

    return _numeric_search(dec, xv, yv, lams, sign_map, parallel, window, grid_per_period, max_grid)


def _numeric_search(dec, xv, yv, lams, sign_map, parallel, window, grid_per_period, max_grid):
    period = 2 * math.pi / float(lams.max() - lams.min())
    npts = int(min(max_grid, math.ceil(grid_per_period * window / period)))
    lo = DEAD_ZONE if parallel else 0.0
    times = np.linspace(lo, window, npts + 1)
    fid = fidelity_curve(dec, times, xv, yv)
    peaks = _local_peaks(fid, 0.999)
    if peaks.size > 200:
        peaks = peaks[np.argsort(fid[peaks])[-200:]]

    def fun(t):
        return float(abs(amplitude(dec, t, xv, yv)))

    certs: list[TransferCertificate] = []
    best = float(fid.max()) if fid.size else 0.0
    for i in sorted(peaks):
        tau, _ = _refine_max(fun, times[i - 1], times[i + 1])
        if tau < (DEAD_ZONE if parallel else 1e-12):
            continue
        cert = check_pst_at(dec, xv, yv, tau, PST_TOL_NUMERIC)
        best = max(best, 1.0 - cert.residual)
        if cert.positive and all(abs(tau - c.tau) > 1e-6 for c in certs):
            certs.append(cert)
    if certs:
        return sorted(certs, key=lambda c: c.tau)
    return [TransferCertificate(Verdict.INCONCLUSIVE, None, None, sign_map, 1.0 - best, "numeric search found no transfer time")]


def has_pst(certs: list[TransferCertificate]) -> bool:
    return any(c.verdict is Verdict.PST for c in certs)


def is_periodic(dec: SpectralDecomposition, x, window: float = DEFAULT_WINDOW) -> Optional[tuple[float, complex]]:
    """Smallest ``tau`` in ``[DEAD_ZONE, window]`` with ``U(tau) x = gamma x``."""
    for cert in find_pst(dec, x, x, window):
        if cert.verdict is Verdict.PERIODIC and cert.tau >= DEAD_ZONE:
            return cert.tau, cert.gamma
    return None


@dataclass(frozen=True)
class SedentaryEstimate:
    """Minimum of ``|x^T U(t) x|`` over a refined grid on ``(0, window]``.

    An estimate of the window infimum from above, not a certified bound.
    """

    window: float
    grid: int
    estimate: float
    argmin: float
    grid_step: float


def sedentariness(dec: SpectralDecomposition, x, window: float, grid: int = 10_000, refine: int = 10) -> SedentaryEstimate:
    if window <= 0:
        raise ValueError("window must be positive")
    xv = as_vector(x)
    times = np.linspace(window / grid, window, grid)
    vals = fidelity_curve(dec, times, xv, xv)
    step = window / grid

    def fun(t):
        return -float(abs(amplitude(dec, t, xv, xv)))

    best_i = int(np.argmin(vals))
    best_t, best_v = float(times[best_i]), float(vals[best_i])
    inner = np.flatnonzero((vals[1:-1] <= vals[:-2]) & (vals[1:-1] <= vals[2:])) + 1
    candidates = inner[np.argsort(vals[inner])[:refine]] if inner.size else []
    for i in candidates:
        t, v = _refine_max(fun, times[i - 1], times[i + 1])
        if -v < best_v:
            best_t, best_v = t, -v
    return SedentaryEstimate(window, grid, float(min(1.0, max(0.0, best_v))), best_t, step)


@dataclass(frozen=True)
class PgstEvidence:
    """Best fidelity seen on ``(0, t_max]``; evidence for PGST, never a proof either way."""

    sup_fidelity: float
    achieving_times: tuple[float, ...]
    t_max: float
    samples: int
    strongly_cospectral: bool
    raw_sup: float = 0.0  # best value from this run alone, before merging ``previous``

    def to_dict(self) -> dict:
        return {
            "sup_fidelity": self.sup_fidelity,
            "achieving_times": list(self.achieving_times),
            "t_max": self.t_max,
            "samples": self.samples,
            "strongly_cospectral": self.strongly_cospectral,
            "evidence_threshold": PGST_EVIDENCE_THRESHOLD,
            "note": "sampled evidence only; the threshold is an engineering choice",
        }


def pgst_evidence(
    dec: SpectralDecomposition,
    x,
    y,
    t_max: float,
    samples: int = 1_000_000,
    seed: int = 0,
    refine: int = 10,
    previous: Optional[PgstEvidence] = None,
) -> PgstEvidence:
    """Sample ``|y^T U(t) x|`` on ``(0, t_max]`` and refine the best points.

    Half of the samples sit on a uniform grid, half are drawn one per stratum
    of the same grid. Passing the result for a shorter window as ``previous``
    keeps its best point, so the reported supremum never decreases in ``t_max``.
    """
    xv, yv = as_vector(x), as_vector(y)
    try:
        cospectral = strong_cospectral(dec, xv, yv) is not None
    except ValueError:
        cospectral = True
    if not cospectral:
        warnings.warn("states are not strongly cospectral; PGST between them is impossible", stacklevel=2)

    half = max(1, samples // 2)
    step = t_max / half
    uniform = np.linspace(step, t_max, half)
    rng = np.random.default_rng(seed)
    stratified = (np.arange(half) + rng.uniform(size=half)) * step
    times = np.concatenate([uniform, stratified])
    vals = fidelity_curve(dec, times, xv, yv)

    def fun(t):
        return float(abs(amplitude(dec, t, xv, yv)))

    order = np.argsort(vals)[::-1][:refine]
    found = []
    for i in order:
        t0 = float(times[i])
        t, v = _refine_max(fun, max(1e-12, t0 - step), min(t_max, t0 + step))
        if v < vals[i]:
            t, v = t0, float(vals[i])
        found.append((v, t))
    raw = max(v for v, _ in found) if found else 0.0
    if previous is not None and previous.t_max <= t_max and previous.achieving_times:
        found.append((previous.sup_fidelity, previous.achieving_times[0]))
    found.sort(reverse=True)
    sup = found[0][0] if found else 0.0
    return PgstEvidence(sup, tuple(t for _, t in found[:refine]), t_max, samples, cospectral, raw)
