from __future__ import annotations

from ._main import RunSpec, Subcommand, main
from ._verify import Check, VerificationReport, run_verification

__all__ = [
    "Check",
    "RunSpec",
    "Subcommand",
    "VerificationReport",
    "main",
    "run_verification",
]
