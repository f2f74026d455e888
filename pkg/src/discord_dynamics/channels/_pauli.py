from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product

import numpy as np

from discord_dynamics._errors import NegativeTimeError
from discord_dynamics.qcore import (
    ATOL,
    IDENTITY2,
    PAULIS,
    ComplexMatrix,
    DensityMatrix,
    tensor_product,
)
from discord_dynamics.states import BellDiagonalState


class ChannelKind(Enum):
    PHASE_FLIP = "phase"
    BIT_FLIP = "bit"
    BIT_PHASE_FLIP = "bitphase"

    @property
    def preserved_axis(self) -> int:
        """Index (0, 1, 2) of the Pauli correlator left untouched."""
        return _PRESERVED_AXIS[self]

    @property
    def flip_operator(self) -> ComplexMatrix:
        return PAULIS[self.preserved_axis]


_PRESERVED_AXIS = {
    ChannelKind.BIT_FLIP: 0,
    ChannelKind.BIT_PHASE_FLIP: 1,
    ChannelKind.PHASE_FLIP: 2,
}


def _check_time(t: float) -> float:
    t = float(t)
    if not t >= 0:
        raise NegativeTimeError(f"Time must be non-negative, got {t}.")
    return t


@dataclass(frozen=True)
class PauliChannel:
    """Identical local Pauli noise on both qubits with dephasing rate ``gamma``."""

    kind: ChannelKind
    gamma: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "kind", ChannelKind(self.kind))
        gamma = float(self.gamma)
        if not gamma >= 0:
            raise ValueError(f"gamma must be non-negative, got {self.gamma}.")
        object.__setattr__(self, "gamma", gamma)

    @property
    def preserved_axis(self) -> int:
        return self.kind.preserved_axis

    def mixing(self, t: float) -> float:
        """p(t) = 1 - exp(-gamma t)"""
        return -float(np.expm1(-self.gamma * _check_time(t)))

    def damping(self, t: float) -> float:
        """Factor exp(-2 gamma t) applied to the non-preserved correlators."""
        return float(np.exp(-2.0 * self.gamma * _check_time(t)))


@dataclass(frozen=True)
class KrausSet:
    """Kraus operators of a single-qubit channel."""

    ops: tuple[ComplexMatrix, ...]

    def __post_init__(self):
        ops = []
        for op in self.ops:
            arr = np.array(op, dtype=np.complex128)
            arr.setflags(write=False)
            ops.append(arr)
        object.__setattr__(self, "ops", tuple(ops))

    def __len__(self) -> int:
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def completeness_error(self) -> float:
        """max |sum_k E_k^dagger E_k - I| entrywise."""
        total = sum(op.conj().T @ op for op in self.ops)
        return float(np.max(np.abs(total - IDENTITY2)))

    def is_trace_preserving(self, atol: float = ATOL) -> bool:
        return self.completeness_error() <= atol


def kraus_operators(ch: PauliChannel, t: float) -> KrausSet:
    """E1 = sqrt(1 - p/2) I, E2 = sqrt(p/2) sigma for the channel's flip operator."""
    p = ch.mixing(t)
    return KrausSet(
        (np.sqrt(1 - p / 2) * IDENTITY2, np.sqrt(p / 2) * ch.kind.flip_operator)
    )


def kraus_apply(rho: DensityMatrix, ch: PauliChannel, t: float) -> DensityMatrix:
    """Evolve a two-qubit state with the same channel acting on each qubit."""
    if not isinstance(rho, DensityMatrix):
        rho = DensityMatrix(rho)
    kraus = kraus_operators(ch, t)
    out = np.zeros((4, 4), dtype=np.complex128)
    for ei, ej in product(kraus, repeat=2):
        e = tensor_product(ei, ej)
        out += e @ rho.mat @ e.conj().T
    # remove the anti-Hermitian roundoff before validation
    return DensityMatrix((out + out.conj().T) / 2)


def evolve_c(s: BellDiagonalState, ch: PauliChannel, t: float) -> BellDiagonalState:
    """Closed-form evolution of the correlation coefficients."""
    factor = ch.damping(t)
    coefs = [
        c if axis == ch.preserved_axis else c * factor
        for axis, c in enumerate(s.coefficients)
    ]
    return BellDiagonalState(*coefs)
