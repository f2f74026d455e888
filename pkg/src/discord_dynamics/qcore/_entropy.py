from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import entr

from discord_dynamics._errors import InvalidStateError
from discord_dynamics.qcore._matrix import ATOL, DensityMatrix, hermitian_eigenvalues

_LN2 = np.log(2.0)


def shannon_entropy(probs: ArrayLike, axis: int = -1) -> NDArray[np.float64] | float:
    """Shannon entropy in bits along ``axis``, with 0 log 0 = 0."""
    probs = np.clip(np.asarray(probs, dtype=np.float64), 0.0, None)
    out = entr(probs).sum(axis=axis) / _LN2
    if np.ndim(out) == 0:
        return float(out)
    return out


def spectrum_entropy(eigenvalues: ArrayLike) -> float:
    """
    Entropy (bits) of a spectrum.

    Eigenvalues in [-1e-12, 0) are treated as zero; anything more negative is
    not a quantum state.
    """
    eigenvalues = np.asarray(eigenvalues, dtype=np.float64)
    if eigenvalues.size and eigenvalues.min() < -ATOL:
        raise InvalidStateError(
            f"Negative eigenvalue {eigenvalues.min():.3g} in a density matrix."
        )
    return float(shannon_entropy(eigenvalues))


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """S(rho) = -Tr(rho log2 rho) in bits."""
    if not isinstance(rho, DensityMatrix):
        rho = DensityMatrix(rho)
    return spectrum_entropy(hermitian_eigenvalues(rho))

