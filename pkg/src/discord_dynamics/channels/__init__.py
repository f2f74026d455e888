from ._pauli import (
    ChannelKind,
    KrausSet,
    PauliChannel,
    evolve_c,
    kraus_apply,
    kraus_operators,
)

__all__ = [
    "ChannelKind",
    "KrausSet",
    "PauliChannel",
    "evolve_c",
    "kraus_apply",
    "kraus_operators",
]
