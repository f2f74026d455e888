from __future__ import annotations

import math

import numpy as np
from scipy.special import xlogy

from discord_dynamics.correlations._dataclasses import CorrelationResult, Method
from discord_dynamics.qcore import spectrum_entropy
from discord_dynamics.states import BellDiagonalState, bell_factors

_LN2 = math.log(2.0)


def _correlation_gain(u: float) -> float:
    """((1 - u)/2) log2(1 - u) + ((1 + u)/2) log2(1 + u), with 0 log 0 = 0."""
    u = min(abs(u), 1.0)
    return float((xlogy(1 - u, 1 - u) + xlogy(1 + u, 1 + u)) / 2 / _LN2)


def mutual_information_bell(s: BellDiagonalState) -> float:
    """I = 2 - S(rho_AB), since both marginals are maximally mixed."""
    return 2.0 - spectrum_entropy(s.eigenvalues)


def classical_bell_closed(s: BellDiagonalState) -> CorrelationResult:
    return CorrelationResult(_correlation_gain(s.c_max), Method.CLOSED_FORM)


def discord_bell_closed(s: BellDiagonalState) -> CorrelationResult:
    """Normal discord I - C with C = f(max |c_i|)."""
    value = mutual_information_bell(s) - _correlation_gain(s.c_max)
    return CorrelationResult(value, Method.CLOSED_FORM)


def sqd_bell_closed(s: BellDiagonalState, x: float) -> CorrelationResult:
    """
    Super quantum discord of a Bell-diagonal state.

    The weak measurement only rescales the classical part: with u = c tanh x,

        D_w = -((1 - u)/2) log2(1 - u) - ((1 + u)/2) log2(1 + u)
              + 1/4 sum (1 ± c1 ± c2 ± c3) log2(1 ± c1 ± c2 ± c3)

    so x = 0 gives the mutual information and x -> inf the normal discord.
    """
    x = float(x)
    if not x >= 0:
        raise ValueError(f"Measurement strength must be non-negative, got {x}.")
    u = s.c_max * math.tanh(x)
    factors = np.clip(bell_factors(*s.coefficients), 0.0, None)
    state_term = float(xlogy(factors, factors).sum() / 4 / _LN2)
    return CorrelationResult(state_term - _correlation_gain(u), Method.CLOSED_FORM)
