from __future__ import annotations

import logging
import math
from typing import Callable

import numpy as np
from numpy.typing import NDArray
from scipy import optimize
from scipy.special import xlogy

from discord_dynamics._errors import DimensionError, OptimizerError
from discord_dynamics.correlations._dataclasses import (
    BasisEvaluation,
    CorrelationResult,
    Method,
    MinimizerOptions,
)
from discord_dynamics.measurements import (
    ZERO_PROBABILITY,
    BlochDirection,
    bloch_vectors,
    conditioned_states,
    projector_stack,
    weak_weights,
)
from discord_dynamics.qcore import (
    DensityMatrix,
    Subsystem,
    partial_trace,
    qubit_spectrum,
    von_neumann_entropy,
)

logger = logging.getLogger(__name__)

DEFAULT_OPTIONS = MinimizerOptions()

_LN2 = math.log(2.0)
# operator weights (on Pi0, Pi1) of a projective measurement
_PROJECTIVE = (1.0, 0.0)

Objective = Callable[[NDArray[np.float64]], NDArray[np.float64]]


def _as_two_qubit(rho) -> DensityMatrix:
    if not isinstance(rho, DensityMatrix):
        rho = DensityMatrix(rho)
    if rho.dim != 4:
        raise DimensionError(f"Expected a 4x4 density matrix, got dim {rho.dim}.")
    return rho


def _branch_entropy(sigma: NDArray[np.complex128], prob: NDArray[np.float64]):
    """p * S(sigma / p) for unnormalized qubit states, 0 for impossible branches."""
    lam = np.clip(qubit_spectrum(sigma), 0.0, None)
    possible = prob >= ZERO_PROBABILITY
    safe_prob = np.where(possible, prob, 1.0)
    # -sum lam log2(lam / p) = -sum lam log2 lam + p log2 p
    value = (xlogy(prob, safe_prob) - xlogy(lam, lam).sum(axis=-1)) / _LN2
    return np.where(possible, value, 0.0)


def _conditional_entropy_objective(
    rho: DensityMatrix, weights: tuple[float, float]
) -> Objective:
    """
    Average entropy of A after a two-outcome measurement on B, as a function of
    a stack of Bloch vectors of shape (..., 3).
    """
    small, large = weights

    def objective(n: NDArray[np.float64]) -> NDArray[np.float64]:
        pi0, pi1 = projector_stack(n)
        total = 0.0
        for op in (small * pi0 + large * pi1, large * pi0 + small * pi1):
            sigma, prob = conditioned_states(rho, op)
            total = total + _branch_entropy(sigma, prob)
        return total

    return objective


def _minimize_over_directions(
    objective: Objective, options: MinimizerOptions
) -> tuple[float, BlochDirection]:
    theta = np.linspace(0.0, math.pi, options.n_theta)
    phi = np.arange(options.n_phi) * (2 * math.pi / options.n_phi)
    grid_theta, grid_phi = np.meshgrid(theta, phi, indexing="ij")
    grid_values = objective(bloch_vectors(grid_theta, grid_phi)).ravel()
    # stable sort breaks ties by the lowest grid index
    starts = np.argsort(grid_values, kind="stable")[: options.n_starts]
    dtheta = theta[1] - theta[0]
    dphi = 2 * math.pi / options.n_phi

    def scalar_objective(angles: NDArray[np.float64]) -> float:
        return float(objective(bloch_vectors(angles[0], angles[1])))

    best_value = math.inf
    best_angles: NDArray[np.float64] | None = None
    for idx in starts:
        x0 = np.array([grid_theta.flat[idx], grid_phi.flat[idx]])
        simplex = np.array([x0, x0 + [dtheta, 0.0], x0 + [0.0, dphi]])
        res = optimize.minimize(
            scalar_objective,
            x0,
            method="Nelder-Mead",
            options={
                "xatol": options.xatol,
                "fatol": options.fatol,
                "maxiter": options.maxiter,
                "initial_simplex": simplex,
            },
        )
        logger.debug(
            "Refined grid point %d (%.6g) to %.12g in %d evaluations.",
            idx,
            grid_values[idx],
            res.fun,
            res.nfev,
        )
        if not res.success:
            logger.warning("Nelder-Mead refinement failed: %s", res.message)
            continue
        if res.fun < best_value:
            best_value = float(res.fun)
            best_angles = res.x
    if best_angles is None:
        raise OptimizerError(
            f"None of the {len(starts)} refinement runs converged to "
            f"fatol={options.fatol}."
        )
    if grid_values[starts[0]] < best_value:
        idx = starts[0]
        best_value = float(grid_values[idx])
        best_angles = np.array([grid_theta.flat[idx], grid_phi.flat[idx]])
    return best_value, BlochDirection.from_angles(*best_angles)


def _entropies(rho: DensityMatrix) -> tuple[float, float, float]:
    s_a = von_neumann_entropy(partial_trace(rho, Subsystem.A))
    s_b = von_neumann_entropy(partial_trace(rho, Subsystem.B))
    return s_a, s_b, von_neumann_entropy(rho)


def mutual_information(rho: DensityMatrix) -> float:
    """I = S(rho_A) + S(rho_B) - S(rho_AB) in bits."""
    s_a, s_b, s_ab = _entropies(_as_two_qubit(rho))
    return s_a + s_b - s_ab


def conditional_entropy(rho: DensityMatrix, direction: BlochDirection) -> float:
    """Average entropy of A after a projective measurement of B along ``direction``."""
    objective = _conditional_entropy_objective(_as_two_qubit(rho), _PROJECTIVE)
    return float(objective(direction.vector))


def weak_conditional_entropy(
    rho: DensityMatrix, direction: BlochDirection, x: float
) -> float:
    """Weak conditional entropy S_w(A|P(x)) for a measurement along ``direction``."""
    objective = _conditional_entropy_objective(_as_two_qubit(rho), weak_weights(x))
    return float(objective(direction.vector))


def _check_strength(x: float) -> float:
    x = float(x)
    if not x >= 0:
        raise ValueError(f"Measurement strength must be non-negative, got {x}.")
    return x


def classical_correlation_numeric(
    rho: DensityMatrix, options: MinimizerOptions = DEFAULT_OPTIONS
) -> CorrelationResult:
    """C = S(rho_A) - min over projective measurements on B of S(A|Pi)."""
    rho = _as_two_qubit(rho)
    s_a, _, _ = _entropies(rho)
    minimum, argmin = _minimize_over_directions(
        _conditional_entropy_objective(rho, _PROJECTIVE), options
    )
    return CorrelationResult(s_a - minimum, Method.NUMERIC, argmin)


def discord_numeric(
    rho: DensityMatrix, options: MinimizerOptions = DEFAULT_OPTIONS
) -> CorrelationResult:
    """D = S(rho_B) - S(rho_AB) + min over projective measurements of S(A|Pi)."""
    rho = _as_two_qubit(rho)
    _, s_b, s_ab = _entropies(rho)
    minimum, argmin = _minimize_over_directions(
        _conditional_entropy_objective(rho, _PROJECTIVE), options
    )
    return CorrelationResult(s_b - s_ab + minimum, Method.NUMERIC, argmin)


def sqd_numeric(
    rho: DensityMatrix, x: float, options: MinimizerOptions = DEFAULT_OPTIONS
) -> CorrelationResult:
    """Super quantum discord D_w = S(rho_B) - S(rho_AB) + min S_w(A|P(x))."""
    rho = _as_two_qubit(rho)
    x = _check_strength(x)
    _, s_b, s_ab = _entropies(rho)
    minimum, argmin = _minimize_over_directions(
        _conditional_entropy_objective(rho, weak_weights(x)), options
    )
    return CorrelationResult(s_b - s_ab + minimum, Method.NUMERIC, argmin)


def evaluate_at(
    rho: DensityMatrix, direction: BlochDirection, x: float
) -> BasisEvaluation:
    """C, D and D_w for a fixed measurement direction, without minimization."""
    rho = _as_two_qubit(rho)
    x = _check_strength(x)
    s_a, s_b, s_ab = _entropies(rho)
    projective = conditional_entropy(rho, direction)
    weak = weak_conditional_entropy(rho, direction, x)
    return BasisEvaluation(
        direction=direction,
        x=x,
        classical=s_a - projective,
        discord=s_b - s_ab + projective,
        sqd=s_b - s_ab + weak,
    )
