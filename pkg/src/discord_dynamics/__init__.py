__version__ = "0.1.0"

from .channels import ChannelKind, PauliChannel
from .correlations import CorrelationResult, Method
from .dynamics import KinkReport, SweepConfig, TrajectoryPoint
from .measurements import BlochDirection, WeakMeasurementPair
from .qcore import DensityMatrix
from .states import BellDiagonalState

__all__ = [
    "BellDiagonalState",
    "BlochDirection",
    "ChannelKind",
    "CorrelationResult",
    "DensityMatrix",
    "KinkReport",
    "Method",
    "PauliChannel",
    "SweepConfig",
    "TrajectoryPoint",
    "WeakMeasurementPair",
]
