from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any

from discord_dynamics.measurements import BlochDirection


class Method(Enum):
    CLOSED_FORM = "closed"
    NUMERIC = "numeric"


@dataclass(frozen=True)
class CorrelationResult:
    """A correlation measure in bits, with the optimal direction if minimized."""

    value: float
    method: Method
    argmin: BlochDirection | None = None

    def __float__(self) -> float:
        return self.value

    def to_json_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"value": self.value, "method": self.method.value}
        if self.argmin is not None:
            out["argmin_theta_phi"] = [self.argmin.theta, self.argmin.phi]
        return out

    @classmethod
    def from_json_dict(cls, js: dict[str, Any]) -> CorrelationResult:
        if (angles := js.get("argmin_theta_phi")) is not None:
            argmin = BlochDirection(*angles)
        else:
            argmin = None
        return cls(js["value"], Method(js["method"]), argmin)


@dataclass(frozen=True)
class BasisEvaluation:
    """Measurement-dependent quantities for one fixed direction on B."""

    direction: BlochDirection
    x: float
    classical: float
    discord: float
    sqd: float

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "theta_phi": [self.direction.theta, self.direction.phi],
            "x": self.x,
            "classical": self.classical,
            "discord": self.discord,
            "sqd": self.sqd,
        }


@dataclass(frozen=True)
class MinimizerOptions:
    """
    Settings of the direction search: a (theta, phi) grid followed by
    Nelder-Mead refinement from the ``n_starts`` best grid points.
    """

    n_theta: int = 64
    n_phi: int = 128
    n_starts: int = 3
    xatol: float = 1e-6
    fatol: float = 1e-10
    maxiter: int = 2000

    def __post_init__(self):
        if self.n_theta < 2 or self.n_phi < 1:
            raise ValueError("The direction grid needs n_theta >= 2 and n_phi >= 1.")
        if self.n_starts < 1:
            raise ValueError("n_starts must be positive.")
