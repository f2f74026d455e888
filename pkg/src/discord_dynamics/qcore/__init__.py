from ._entropy import (
    shannon_entropy,
    spectrum_entropy,
    von_neumann_entropy,
)
from ._matrix import (
    ATOL,
    IDENTITY2,
    IDENTITY4,
    PAULIS,
    SIGMA1,
    SIGMA2,
    SIGMA3,
    ComplexMatrix,
    DensityMatrix,
    Subsystem,
    as_matrix,
    hermitian_eigenvalues,
    partial_trace,
    qubit_spectrum,
    tensor_product,
)

__all__ = [
    "ATOL",
    "IDENTITY2",
    "IDENTITY4",
    "PAULIS",
    "SIGMA1",
    "SIGMA2",
    "SIGMA3",
    "ComplexMatrix",
    "DensityMatrix",
    "Subsystem",
    "as_matrix",
    "hermitian_eigenvalues",
    "partial_trace",
    "qubit_spectrum",
    "shannon_entropy",
    "spectrum_entropy",
    "tensor_product",
    "von_neumann_entropy",
]
