from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TypeVar, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

from discord_dynamics._errors import (
    DimensionError,
    InvalidStateError,
    NotHermitianError,
)

ComplexMatrix = NDArray[np.complex128]

# entrywise Hermiticity, trace and eigenvalue tolerance
ATOL = 1e-12

IDENTITY2: ComplexMatrix = np.eye(2, dtype=np.complex128)
IDENTITY4: ComplexMatrix = np.eye(4, dtype=np.complex128)
SIGMA1: ComplexMatrix = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA2: ComplexMatrix = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA3: ComplexMatrix = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULIS: tuple[ComplexMatrix, ComplexMatrix, ComplexMatrix] = (SIGMA1, SIGMA2, SIGMA3)

for _m in (IDENTITY2, IDENTITY4, *PAULIS):
    _m.setflags(write=False)
del _m


class Subsystem(Enum):
    A = "A"
    B = "B"


def as_matrix(m: ArrayLike, dims: tuple[int, ...] = (2, 4)) -> ComplexMatrix:
    """Convert input into a square complex matrix whose size is one of ``dims``."""
    if isinstance(m, DensityMatrix):
        arr = m.mat
    else:
        arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] not in dims:
        raise DimensionError(
            f"Expected a square matrix of size {' or '.join(map(str, dims))}, "
            f"got shape {arr.shape}."
        )
    return arr


def _hermiticity_error(arr: ComplexMatrix) -> float:
    return float(np.max(np.abs(arr - arr.conj().T)))


@dataclass(frozen=True)
class DensityMatrix:
    """A validated 2x2 or 4x4 density matrix (Hermitian, unit trace, PSD)."""

    mat: ComplexMatrix

    def __post_init__(self):
        arr = as_matrix(self.mat).copy()
        if (herr := _hermiticity_error(arr)) > ATOL:
            raise InvalidStateError(f"Matrix is not Hermitian (deviation {herr:.3g}).")
        if abs(np.trace(arr) - 1) > ATOL:
            raise InvalidStateError(
                f"Matrix does not have unit trace (trace {np.trace(arr).real:.12g})."
            )
        if (lowest := np.linalg.eigvalsh(arr)[0]) < -ATOL:
            raise InvalidStateError(
                f"Matrix is not positive semidefinite (eigenvalue {lowest:.3g})."
            )
        arr.setflags(write=False)
        object.__setattr__(self, "mat", arr)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, DensityMatrix):
            return NotImplemented
        return self.dim == other.dim and bool(np.array_equal(self.mat, other.mat))

    def __hash__(self) -> int:
        return hash(self.mat.tobytes())

    def allclose(self, other: DensityMatrix | ArrayLike, atol: float = ATOL) -> bool:
        """True if the two states agree entrywise within ``atol``."""
        return bool(np.allclose(self.mat, as_matrix(other), rtol=0, atol=atol))


_M = TypeVar("_M", bound=Union[DensityMatrix, np.ndarray])


def tensor_product(a: ArrayLike, b: ArrayLike) -> ComplexMatrix:
    """Kronecker product of two single-qubit operators."""
    a = as_matrix(a, dims=(2,))
    b = as_matrix(b, dims=(2,))
    return np.kron(a, b)


def partial_trace(rho: _M, keep: Subsystem | str) -> _M:
    """
    Reduce a two-qubit operator to the ``keep`` subsystem.

    A ``DensityMatrix`` input gives a ``DensityMatrix``; a plain array (which
    need not have unit trace) gives a plain array.
    """
    keep = Subsystem(keep)
    arr = as_matrix(rho, dims=(4,)).reshape(2, 2, 2, 2)
    if keep is Subsystem.A:
        out = np.einsum("ikjk->ij", arr)
    else:
        out = np.einsum("kikj->ij", arr)
    if isinstance(rho, DensityMatrix):
        return DensityMatrix(out)
    return out


def hermitian_eigenvalues(m: DensityMatrix | ArrayLike) -> NDArray[np.float64]:
    """Eigenvalues of a Hermitian matrix, in descending order."""
    arr = as_matrix(m)
    if (herr := _hermiticity_error(arr)) > ATOL:
        raise NotHermitianError(f"Matrix is not Hermitian (deviation {herr:.3g}).")
    return np.linalg.eigvalsh(arr)[::-1].copy()


def qubit_spectrum(mats: ArrayLike) -> NDArray[np.float64]:
    """
    Eigenvalues of a stack of Hermitian 2x2 matrices.

    Parameters
    ----------
    mats : array of shape (..., 2, 2)
        Hermitian matrices; Hermiticity is assumed, not checked.

    Returns
    -------
    array of shape (..., 2)
        Eigenvalues in descending order, from the closed-form 2x2 solution.
    """
    mats = np.asarray(mats)
    a = mats[..., 0, 0].real
    d = mats[..., 1, 1].real
    half_trace = (a + d) / 2
    radius = np.sqrt(((a - d) / 2) ** 2 + np.abs(mats[..., 0, 1]) ** 2)
    return np.stack([half_trace + radius, half_trace - radius], axis=-1)
