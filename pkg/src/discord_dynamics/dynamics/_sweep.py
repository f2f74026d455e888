from __future__ import annotations

import logging
import math
from collections.abc import Iterable

import pandas as pd

from discord_dynamics.channels import PauliChannel, evolve_c
from discord_dynamics.correlations import (
    Method,
    classical_bell_closed,
    discord_bell_closed,
    discord_numeric,
    mutual_information,
    mutual_information_bell,
    sqd_bell_closed,
    sqd_numeric,
)
from discord_dynamics.dynamics._dataclasses import SweepConfig, TrajectoryPoint
from discord_dynamics.states import BellDiagonalState, to_density_matrix

logger = logging.getLogger(__name__)

BASE_COLUMNS = ("gamma_t", "mutual_info", "classical", "discord")


def _closed_point(
    gamma_t: float, s: BellDiagonalState, x_values: tuple[float, ...]
) -> TrajectoryPoint:
    return TrajectoryPoint(
        gamma_t=gamma_t,
        mutual_info=mutual_information_bell(s),
        classical=classical_bell_closed(s).value,
        discord=discord_bell_closed(s).value,
        sqd={x: sqd_bell_closed(s, x).value for x in x_values},
    )


def _numeric_point(
    gamma_t: float, s: BellDiagonalState, cfg: SweepConfig
) -> TrajectoryPoint:
    rho = to_density_matrix(s)
    mutual_info = mutual_information(rho)
    discord = discord_numeric(rho, cfg.options).value
    return TrajectoryPoint(
        gamma_t=gamma_t,
        mutual_info=mutual_info,
        classical=mutual_info - discord,
        discord=discord,
        sqd={x: sqd_numeric(rho, x, cfg.options).value for x in cfg.x_values},
    )


def sweep(cfg: SweepConfig) -> list[TrajectoryPoint]:
    """Evolve the initial state over the scaled-time grid and evaluate all measures."""
    logger.info(
        "Sweeping %s over gamma*t in [0, %g] (%d steps, %s).",
        cfg.initial,
        cfg.t_max,
        cfg.steps,
        cfg.method.value,
    )
    gamma = cfg.channel.gamma
    points: list[TrajectoryPoint] = []
    for gamma_t in cfg.gamma_t_grid:
        gamma_t = float(gamma_t)
        t = gamma_t / gamma if gamma > 0 else gamma_t
        state = evolve_c(cfg.initial, cfg.channel, t)
        if cfg.method is Method.CLOSED_FORM:
            point = _closed_point(gamma_t, state, cfg.x_values)
        else:
            point = _numeric_point(gamma_t, state, cfg)
        logger.debug("gamma*t=%.6g: %s", gamma_t, point)
        points.append(point)
    return points


def transition_time_analytic(s: BellDiagonalState, ch: PauliChannel) -> float | None:
    """
    Scaled time at which a damped coefficient falls to the preserved one.

    Returns None when the preserved coefficient is zero or already the largest,
    in which case the optimal measurement never switches.
    """
    coefs = [abs(c) for c in s.coefficients]
    preserved = coefs.pop(ch.preserved_axis)
    damped = max(coefs)
    if preserved == 0 or damped <= preserved:
        return None
    return 0.5 * math.log(damped / preserved)


def trajectory_frame(points: Iterable[TrajectoryPoint]) -> pd.DataFrame:
    """Tabulate a sweep with one column per measure, in CSV column order."""
    rows = [point.to_json_dict() for point in points]
    if rows:
        columns = list(rows[0].keys())
    else:
        columns = list(BASE_COLUMNS)
    return pd.DataFrame(rows, columns=columns)


def frame_series(frame: pd.DataFrame, column: str) -> list[tuple[float, float]]:
    """(gamma_t, value) pairs of one column of a trajectory table."""
    return list(zip(frame["gamma_t"].tolist(), frame[column].tolist()))


def series_columns(frame: pd.DataFrame) -> list[str]:
    """Columns examined for sudden changes: classical, discord and every sqd_x."""
    names = [c for c in frame.columns if c in ("classical", "discord")]
    return names + [c for c in frame.columns if c.startswith("sqd_x=")]
