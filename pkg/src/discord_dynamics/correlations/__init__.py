from ._closed import (
    classical_bell_closed,
    discord_bell_closed,
    mutual_information_bell,
    sqd_bell_closed,
)
from ._dataclasses import BasisEvaluation, CorrelationResult, Method, MinimizerOptions
from ._numeric import (
    DEFAULT_OPTIONS,
    classical_correlation_numeric,
    conditional_entropy,
    discord_numeric,
    evaluate_at,
    mutual_information,
    sqd_numeric,
    weak_conditional_entropy,
)

__all__ = [
    "DEFAULT_OPTIONS",
    "BasisEvaluation",
    "CorrelationResult",
    "Method",
    "MinimizerOptions",
    "classical_bell_closed",
    "classical_correlation_numeric",
    "conditional_entropy",
    "discord_bell_closed",
    "discord_numeric",
    "evaluate_at",
    "mutual_information",
    "mutual_information_bell",
    "sqd_bell_closed",
    "sqd_numeric",
    "weak_conditional_entropy",
]
