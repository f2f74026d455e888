from ._bell import (
    BELL_ATOL,
    SIGN_PATTERNS,
    BellDiagonalState,
    bell_factors,
    from_density_matrix,
    random_bell_diagonal,
    to_density_matrix,
    validate,
)

__all__ = [
    "BELL_ATOL",
    "SIGN_PATTERNS",
    "BellDiagonalState",
    "bell_factors",
    "from_density_matrix",
    "random_bell_diagonal",
    "to_density_matrix",
    "validate",
]
