from ._dataclasses import KinkReport, SweepConfig, TrajectoryPoint, sqd_column
from ._kink import DEFAULT_THRESHOLD, DEFAULT_WINDOW, detect_kink, strongest_kink
from ._sweep import (
    frame_series,
    series_columns,
    sweep,
    trajectory_frame,
    transition_time_analytic,
)

__all__ = [
    "DEFAULT_THRESHOLD",
    "DEFAULT_WINDOW",
    "KinkReport",
    "SweepConfig",
    "TrajectoryPoint",
    "detect_kink",
    "frame_series",
    "series_columns",
    "sqd_column",
    "strongest_kink",
    "sweep",
    "trajectory_frame",
    "transition_time_analytic",
]
