from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from discord_dynamics._errors import DimensionError, ZeroProbabilityError
from discord_dynamics.qcore import (
    IDENTITY2,
    PAULIS,
    ComplexMatrix,
    DensityMatrix,
    as_matrix,
)

# below this a measurement branch is treated as impossible
ZERO_PROBABILITY = 1e-14

_PAULI_STACK = np.stack(PAULIS)


@dataclass(frozen=True)
class BlochDirection:
    """Unit Bloch vector n = (sin t cos p, sin t sin p, cos t) with t in [0, pi]."""

    theta: float
    phi: float

    def __post_init__(self):
        theta, phi = float(self.theta), float(self.phi)
        if not 0.0 <= theta <= math.pi:
            raise ValueError(f"theta must be in [0, pi], got {theta}.")
        if not 0.0 <= phi < 2 * math.pi:
            raise ValueError(f"phi must be in [0, 2 pi), got {phi}.")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)

    @classmethod
    def from_angles(cls, theta: float, phi: float) -> BlochDirection:
        """Direction for arbitrary angles, folded into the canonical ranges."""
        return cls.from_vector(bloch_vectors(theta, phi))

    @classmethod
    def from_vector(cls, n: ArrayLike) -> BlochDirection:
        n = np.asarray(n, dtype=np.float64)
        n = n / np.linalg.norm(n)
        theta = float(np.arccos(np.clip(n[2], -1.0, 1.0)))
        phi = float(np.arctan2(n[1], n[0]) % (2 * math.pi))
        if phi >= 2 * math.pi:
            phi = 0.0
        return cls(theta, phi)

    @property
    def vector(self) -> NDArray[np.float64]:
        return bloch_vectors(self.theta, self.phi)


@dataclass(frozen=True)
class WeakMeasurementPair:
    """Two-outcome weak measurement of strength ``x`` along ``direction``."""

    direction: BlochDirection
    x: float

    def __post_init__(self):
        x = float(self.x)
        if not x >= 0:
            raise ValueError(f"Measurement strength must be non-negative, got {x}.")
        object.__setattr__(self, "x", x)


def bloch_vectors(theta: ArrayLike, phi: ArrayLike) -> NDArray[np.float64]:
    """Unit vectors for (broadcast) polar and azimuthal angles, shape (..., 3)."""
    theta = np.asarray(theta, dtype=np.float64)
    phi = np.asarray(phi, dtype=np.float64)
    return np.stack(
        [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)],
        axis=-1,
    )


def projector_stack(
    n: ArrayLike,
) -> tuple[NDArray[np.complex128], NDArray[np.complex128]]:
    """Projectors (I + n.s)/2 and (I - n.s)/2 for a stack of unit vectors (..., 3)."""
    ndotsigma = np.tensordot(np.asarray(n, dtype=np.float64), _PAULI_STACK, axes=1)
    return (IDENTITY2 + ndotsigma) / 2, (IDENTITY2 - ndotsigma) / 2


def weak_weights(x: float) -> tuple[float, float]:
    """Coefficients sqrt((1 - tanh x)/2) and sqrt((1 + tanh x)/2)."""
    tx = math.tanh(x)
    return math.sqrt((1 - tx) / 2), math.sqrt((1 + tx) / 2)


def projectors(d: BlochDirection) -> tuple[ComplexMatrix, ComplexMatrix]:
    """Projector pair (Pi0, Pi1) onto the +n and -n eigenstates of n.s."""
    return projector_stack(d.vector)


def weak_operators(p: WeakMeasurementPair) -> tuple[ComplexMatrix, ComplexMatrix]:
    """Weak measurement operators (P(+x), P(-x)) built from the projector pair."""
    pi0, pi1 = projectors(p.direction)
    small, large = weak_weights(p.x)
    return small * pi0 + large * pi1, large * pi0 + small * pi1


def conditioned_states(
    rho: DensityMatrix | ArrayLike, ops: ArrayLike
) -> tuple[NDArray[np.complex128], NDArray[np.float64]]:
    """
    Unnormalized post-measurement states of A for a stack of operators on B.

    Parameters
    ----------
    rho : 4x4 density matrix
    ops : array of shape (..., 2, 2)
        Measurement operators acting on qubit B.

    Returns
    -------
    sigma : array of shape (..., 2, 2)
        Tr_B[(I x M) rho (I x M)^dagger] for every operator M.
    probs : array of shape (...)
        Traces of ``sigma``.
    """
    rho4 = as_matrix(rho, dims=(4,)).reshape(2, 2, 2, 2)
    ops = np.asarray(ops, dtype=np.complex128)
    sigma = np.einsum("...kb,abcd,...kd->...ac", ops, rho4, ops.conj())
    probs = np.einsum("...ii->...", sigma).real
    return sigma, probs


def conditioned_state_prob(
    rho: DensityMatrix, m: ArrayLike
) -> tuple[DensityMatrix, float]:
    """
    State of A conditioned on measuring ``m`` on B, and the outcome probability.

    Raises
    ------
    ZeroProbabilityError
        If the outcome has probability below 1e-14.
    """
    m = as_matrix(m, dims=(2,))
    if not isinstance(rho, DensityMatrix):
        rho = DensityMatrix(rho)
    if rho.dim != 4:
        raise DimensionError(f"Expected a 4x4 density matrix, got dim {rho.dim}.")
    sigma, prob = conditioned_states(rho, m)
    prob = float(prob)
    if prob < ZERO_PROBABILITY:
        raise ZeroProbabilityError(f"Measurement outcome has probability {prob:.3g}.")
    sigma = sigma / prob
    return DensityMatrix((sigma + sigma.conj().T) / 2), prob
