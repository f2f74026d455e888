from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import NDArray

from discord_dynamics._errors import (
    DimensionError,
    InvalidStateError,
    NotBellDiagonalError,
)
from discord_dynamics.qcore import (
    ATOL,
    IDENTITY2,
    IDENTITY4,
    PAULIS,
    DensityMatrix,
    tensor_product,
)

logger = logging.getLogger(__name__)

# tolerance on Pauli components outside the Bell-diagonal pattern
BELL_ATOL = 1e-10

# sign patterns (s1, s2, s3) of the four eigenvalues (1 + s1 c1 + s2 c2 + s3 c3) / 4
SIGN_PATTERNS = np.array(
    [
        [-1, -1, -1],
        [-1, 1, 1],
        [1, -1, 1],
        [1, 1, -1],
    ],
    dtype=np.float64,
)

_CORRELATORS = tuple(tensor_product(s, s) for s in PAULIS)


def bell_factors(c1: float, c2: float, c3: float) -> NDArray[np.float64]:
    """The four factors 1 ± c1 ± c2 ± c3 (four times the eigenvalues)."""
    return 1.0 + SIGN_PATTERNS @ np.array([c1, c2, c3], dtype=np.float64)


def validate(c1: float, c2: float, c3: float) -> bool:
    """True if (c1, c2, c3) parameterizes a valid Bell-diagonal state."""
    cs = np.array([c1, c2, c3], dtype=np.float64)
    if not np.all(np.isfinite(cs)):
        return False
    if np.any(np.abs(cs) > 1 + ATOL):
        return False
    return bool(np.all(bell_factors(c1, c2, c3) / 4 >= -ATOL))


@dataclass(frozen=True)
class BellDiagonalState:
    """Bell-diagonal two-qubit state (I + sum_i c_i sigma_i x sigma_i) / 4."""

    c1: float
    c2: float
    c3: float

    def __post_init__(self):
        for name in ("c1", "c2", "c3"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if not validate(self.c1, self.c2, self.c3):
            raise InvalidStateError(
                f"invalid Bell-diagonal state: c = ({self.c1}, {self.c2}, {self.c3})"
            )

    @property
    def coefficients(self) -> tuple[float, float, float]:
        return (self.c1, self.c2, self.c3)

    @property
    def c_max(self) -> float:
        """max(|c1|, |c2|, |c3|)"""
        return max(abs(c) for c in self.coefficients)

    @property
    def eigenvalues(self) -> NDArray[np.float64]:
        """Spectrum in the order of ``SIGN_PATTERNS``, tiny negatives clipped."""
        return np.clip(bell_factors(*self.coefficients) / 4, 0.0, None)

    def to_json_dict(self) -> dict[str, Any]:
        return {"c1": self.c1, "c2": self.c2, "c3": self.c3}

    @classmethod
    def from_json_dict(cls, js: dict[str, Any]) -> BellDiagonalState:
        return cls(js["c1"], js["c2"], js["c3"])


def to_density_matrix(s: BellDiagonalState) -> DensityMatrix:
    """Build the 4x4 density matrix of a Bell-diagonal state."""
    mat = IDENTITY4.copy()
    for c, corr in zip(s.coefficients, _CORRELATORS):
        mat = mat + c * corr
    return DensityMatrix(mat / 4)


def from_density_matrix(rho: DensityMatrix) -> BellDiagonalState:
    """
    Recover (c1, c2, c3) from a Bell-diagonal density matrix.

    Every Pauli component Tr[rho (s_i x s_j)] other than the three diagonal
    correlators (and the identity) must vanish within ``BELL_ATOL``.
    """
    if not isinstance(rho, DensityMatrix):
        rho = DensityMatrix(rho)
    if rho.dim != 4:
        raise DimensionError(f"Expected a 4x4 density matrix, got dim {rho.dim}.")
    basis = (IDENTITY2, *PAULIS)
    coefs = [0.0, 0.0, 0.0]
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            if i == j == 0:
                continue
            component = np.trace(rho.mat @ tensor_product(a, b)).real
            if i == j:
                coefs[i - 1] = component
            elif abs(component) > BELL_ATOL:
                raise NotBellDiagonalError(
                    f"State has a component {component:.3g} on the "
                    f"({i}, {j}) Pauli product."
                )
    return BellDiagonalState(*coefs)


def random_bell_diagonal(
    rng: np.random.Generator | int | None = None, n: int = 1
) -> list[BellDiagonalState]:
    """Draw ``n`` valid states uniformly from [-1, 1]^3 by rejection."""
    rng = np.random.default_rng(rng)
    out: list[BellDiagonalState] = []
    rejected = 0
    while len(out) < n:
        c = rng.uniform(-1.0, 1.0, size=3)
        if validate(*c):
            out.append(BellDiagonalState(*c))
        else:
            rejected += 1
    logger.debug("Sampled %d Bell-diagonal states (%d rejected).", n, rejected)
    return out
