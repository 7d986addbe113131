"""Brute-force matrix exponential used as an independent check on ``evolve``.

Deliberately shares nothing with :mod:`pairwalk.spectral`: it works on the
dense matrix directly (scaling and squaring of a truncated Taylor series).
"""

from __future__ import annotations

import numpy as np


def expm_series(matrix, t: float, terms: int = 30) -> np.ndarray:
    """``exp(i t M)`` for a real square ``M``."""
    arg = 1j * t * np.asarray(matrix, dtype=float)
    norm = float(np.max(np.sum(np.abs(arg), axis=1))) if arg.size else 0.0
    squarings = max(0, int(np.ceil(np.log2(norm / 0.5)))) if norm > 0.5 else 0
    arg = arg / (2.0 ** squarings)

    n = arg.shape[0]
    result = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    for k in range(1, terms + 1):
        term = term @ arg / k
        result = result + term
    for _ in range(squarings):
        result = result @ result
    return result


def evolve_series(matrix, t: float, x) -> np.ndarray:
    return expm_series(matrix, t) @ np.asarray(x, dtype=float)
