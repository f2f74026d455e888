from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np
from numpy.typing import NDArray

from discord_dynamics.channels import PauliChannel
from discord_dynamics.correlations import DEFAULT_OPTIONS, Method, MinimizerOptions
from discord_dynamics.states import BellDiagonalState


def sqd_column(x: float) -> str:
    """CSV column name of the super quantum discord at strength ``x``."""
    return f"sqd_x={x:g}"


@dataclass(frozen=True)
class SweepConfig:
    initial: BellDiagonalState
    channel: PauliChannel
    x_values: tuple[float, ...] = (0.5,)
    t_max: float = 2.0
    steps: int = 401
    method: Method = Method.CLOSED_FORM
    options: MinimizerOptions = DEFAULT_OPTIONS

    def __post_init__(self):
        x_values = tuple(float(x) for x in self.x_values)
        if any(not x >= 0 for x in x_values):
            raise ValueError(f"Measurement strengths must be non-negative: {x_values}")
        if len({sqd_column(x) for x in x_values}) != len(x_values):
            raise ValueError(f"Duplicated measurement strengths: {x_values}")
        if not self.t_max > 0:
            raise ValueError(f"t_max must be positive, got {self.t_max}.")
        if int(self.steps) != self.steps or self.steps < 2:
            raise ValueError(f"steps must be an integer >= 2, got {self.steps}.")
        object.__setattr__(self, "x_values", x_values)
        object.__setattr__(self, "t_max", float(self.t_max))
        object.__setattr__(self, "steps", int(self.steps))
        object.__setattr__(self, "method", Method(self.method))

    @property
    def gamma_t_grid(self) -> NDArray[np.float64]:
        """Uniform grid of scaled times including both endpoints."""
        return np.linspace(0.0, self.t_max, self.steps)


@dataclass(frozen=True)
class TrajectoryPoint:
    gamma_t: float
    mutual_info: float
    classical: float
    discord: float
    sqd: dict[float, float] = field(default_factory=dict, hash=False)

    def to_json_dict(self) -> dict[str, Any]:
        out = {
            "gamma_t": self.gamma_t,
            "mutual_info": self.mutual_info,
            "classical": self.classical,
            "discord": self.discord,
        }
        for x, value in self.sqd.items():
            out[sqd_column(x)] = value
        return out


@dataclass(frozen=True)
class KinkReport:
    """A slope discontinuity found in a correlation time series."""

    series_name: str
    gamma_t_star: float
    slope_jump: float
    flagged: bool

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "series_name": self.series_name,
            "gamma_t_star": self.gamma_t_star,
            "slope_jump": self.slope_jump,
            "flagged": self.flagged,
        }

    @classmethod
    def from_json_dict(cls, js: dict[str, Any]) -> KinkReport:
        return cls(
            series_name=js["series_name"],
            gamma_t_star=js["gamma_t_star"],
            slope_jump=js["slope_jump"],
            flagged=js["flagged"],
        )
