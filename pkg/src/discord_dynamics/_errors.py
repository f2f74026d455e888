from __future__ import annotations


class DiscordDynamicsError(Exception):
    """Base class of all errors raised by discord_dynamics."""


class DimensionError(DiscordDynamicsError, ValueError):
    """A matrix does not have the expected shape."""


class InvalidStateError(DiscordDynamicsError, ValueError):
    """A matrix or c-vector does not describe a valid quantum state."""


class NotHermitianError(InvalidStateError):
    """A matrix expected to be Hermitian is not."""


class NotBellDiagonalError(DiscordDynamicsError, ValueError):
    """A two-qubit state has components outside the Bell-diagonal family."""


class NegativeTimeError(DiscordDynamicsError, ValueError):
    """A channel was asked to evolve backwards in time."""


class ZeroProbabilityError(DiscordDynamicsError, ValueError):
    """A measurement outcome has (numerically) zero probability."""


class OptimizerError(DiscordDynamicsError, RuntimeError):
    """Minimization over measurement directions did not converge."""


class GridTooCoarseError(DiscordDynamicsError, ValueError):
    """A time series is too short or not uniformly sampled."""
