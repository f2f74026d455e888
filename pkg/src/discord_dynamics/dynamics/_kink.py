from __future__ import annotations

import logging
from collections.abc import Sequence

import numpy as np
from numpy.polynomial import polynomial as P
from numpy.typing import NDArray

from discord_dynamics._errors import GridTooCoarseError
from discord_dynamics.dynamics._dataclasses import KinkReport

logger = logging.getLogger(__name__)

DEFAULT_THRESHOLD = 0.5
DEFAULT_WINDOW = 3
# local maxima of the jump profile below this are roundoff, not kinks
MIN_JUMP = 1e-6
# grid points on each side of a candidate left out of the slope fits
FIT_GAP = 1


def _as_grid(
    series: Sequence[tuple[float, float]],
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    arr = np.asarray(series, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("A series must be a sequence of (gamma_t, value) pairs.")
    if arr.shape[0] < 5:
        raise GridTooCoarseError(
            f"Kink detection needs at least 5 points, got {arr.shape[0]}."
        )
    t, v = arr[:, 0], arr[:, 1]
    diffs = np.diff(t)
    h = diffs[0]
    if not h > 0 or np.max(np.abs(diffs - h)) > 1e-9 * h:
        raise GridTooCoarseError("Kink detection needs a uniform increasing grid.")
    return t, v


def _jump_profile(
    t: NDArray[np.float64], v: NDArray[np.float64], window: int
) -> tuple[NDArray[np.intp], NDArray[np.float64]]:
    """Indices of the candidate points and |right - left| one-sided slopes there."""
    h = t[1] - t[0]
    w = min(window, (len(t) - 1) // 2)
    idx = np.arange(w, len(t) - w)
    left = (v[idx] - v[idx - w]) / (w * h)
    right = (v[idx + w] - v[idx]) / (w * h)
    return idx, np.abs(right - left)


def _fitted_jump(
    t: NDArray[np.float64], v: NDArray[np.float64], i: int, window: int
) -> float | None:
    """
    Slope jump at candidate ``i`` from quadratic fits to each side.

    Each side takes ``3 * window`` points, skipping ``FIT_GAP`` points next to
    the candidate so that the interval holding the kink is not fitted. Both
    derivatives are evaluated where the two fits meet, so the curvature of a
    smooth background cancels. Returns None when a side has fewer than three
    points.
    """
    n_fit = 3 * window
    lo = slice(max(0, i - FIT_GAP - n_fit), i - FIT_GAP)
    hi = slice(i + FIT_GAP + 1, min(len(t), i + FIT_GAP + 1 + n_fit))
    if len(t[lo]) < 3 or len(t[hi]) < 3:
        return None
    # fit in coordinates centered on the candidate for conditioning
    left = P.polyfit(t[lo] - t[i], v[lo], 2)
    right = P.polyfit(t[hi] - t[i], v[hi], 2)
    reach = (FIT_GAP + 1) * (t[1] - t[0])
    meet = 0.0
    roots = P.polyroots(P.polysub(right, left)) if np.any(right != left) else []
    real = [r.real for r in np.atleast_1d(roots) if abs(r.imag) < 1e-12]
    if inside := [r for r in real if abs(r) <= reach]:
        meet = min(inside, key=abs)
    slopes = P.polyval(meet, P.polyder(right)) - P.polyval(meet, P.polyder(left))
    return float(abs(slopes))


def _report(
    t: NDArray[np.float64],
    v: NDArray[np.float64],
    i: int,
    profile_jump: float,
    threshold: float,
    name: str,
    window: int,
) -> KinkReport:
    jump = _fitted_jump(t, v, i, window)
    if jump is None:
        jump = float(profile_jump)
    return KinkReport(
        series_name=name,
        gamma_t_star=float(t[i]),
        slope_jump=jump,
        flagged=bool(jump > threshold),
    )


def detect_kink(
    series: Sequence[tuple[float, float]],
    threshold: float = DEFAULT_THRESHOLD,
    *,
    name: str = "series",
    window: int = DEFAULT_WINDOW,
) -> list[KinkReport]:
    """
    Find slope discontinuities in a uniformly sampled series.

    At every point at least ``window`` intervals away from both ends, the
    slopes over the ``window`` intervals to the left and to the right are
    compared. Local maxima of this jump profile are the candidates. The jump
    reported for a candidate comes from quadratic fits on both sides, and it
    is flagged when it exceeds ``threshold`` (value units per unit of gamma_t).
    """
    t, v = _as_grid(series)
    idx, jump = _jump_profile(t, v, window)
    reports: list[KinkReport] = []
    for k in range(1, len(jump) - 1):
        if jump[k] > jump[k - 1] and jump[k] >= jump[k + 1] and jump[k] > MIN_JUMP:
            reports.append(
                _report(t, v, int(idx[k]), jump[k], threshold, name, window)
            )
    logger.debug("%s: %d kink candidates", name, len(reports))
    return reports


def strongest_kink(
    series: Sequence[tuple[float, float]],
    threshold: float = DEFAULT_THRESHOLD,
    *,
    name: str = "series",
    window: int = DEFAULT_WINDOW,
) -> KinkReport:
    """The most prominent slope jump of a series, flagged or not."""
    if reports := detect_kink(series, threshold, name=name, window=window):
        return max(reports, key=lambda r: r.slope_jump)
    t, v = _as_grid(series)
    idx, jump = _jump_profile(t, v, window)
    k = int(np.argmax(jump))
    return _report(t, v, int(idx[k]), jump[k], threshold, name, window)
