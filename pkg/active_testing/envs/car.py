"""
Car approaching an obstacle under a linear feedback law.

The car measures the obstacle position x_s(t) once per step; the environment
vector w is the sequence of those readings. The true obstacle sits at 5 m.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

import numpy as np

from active_testing.exceptions import SimulationError

from .trajectory import Trajectory

logger = logging.getLogger(__name__)

CAR_HORIZON = 100
CAR_SENSOR_RANGE = (4.5, 5.5)
CAR_OBSTACLE = 5.0
CAR_GAINS = (-1.0, -2.5)


def car_domain(horizon: int = CAR_HORIZON) -> tuple[tuple[float, ...], tuple[float, ...]]:
    low, high = CAR_SENSOR_RANGE
    return (low,) * horizon, (high,) * horizon


def simulate_car(  # noqa: PLR0913
    w: Sequence[float],
    k1: float = CAR_GAINS[0],
    k2: float = CAR_GAINS[1],
    *,
    dt: float = 0.1,
    horizon: int = CAR_HORIZON,
    x_init: float = 0.0,
    v_init: float = 3.0,
    accel_limit: float = 3.0,
) -> Trajectory:
    """
    Forward-Euler double integrator driven by a = clip(k1 (x - x_s) + k2 v).

    Channels x, v and a carry horizon + 1 samples; the final acceleration
    sample uses the last sensor reading.
    """
    readings = np.asarray(w, dtype=float).reshape(-1)
    if readings.size != horizon:
        msg = f"the car takes {horizon} sensor readings, got {readings.size}"
        raise SimulationError(msg)

    x = np.empty(horizon + 1)
    v = np.empty(horizon + 1)
    a = np.empty(horizon + 1)
    x[0], v[0] = x_init, v_init
    for step in range(horizon):
        a[step] = np.clip(k1 * (x[step] - readings[step]) + k2 * v[step], -accel_limit, accel_limit)
        x[step + 1] = x[step] + dt * v[step]
        v[step + 1] = v[step] + dt * a[step]
    a[horizon] = np.clip(
        k1 * (x[horizon] - readings[-1]) + k2 * v[horizon],
        -accel_limit,
        accel_limit,
    )
    return Trajectory(t=dt * np.arange(horizon + 1), channels={"x": x, "v": v, "a": a})


def nominal_clearance(k1: float, k2: float, horizon: int = CAR_HORIZON) -> float:
    """min_t (obstacle - x(t)) with every reading exactly at the obstacle."""
    trajectory = simulate_car(np.full(horizon, CAR_OBSTACLE), k1, k2, horizon=horizon)
    return float(np.min(CAR_OBSTACLE - trajectory["x"]))


def calibrate_car_gains(
    k1: float = CAR_GAINS[0],
    candidates: Sequence[float] | None = None,
    target: float = 0.025,
    upper: float = 0.1,
) -> tuple[float, float, float]:
    """
    Pick the velocity gain whose nominal run is near-critical.

    Among candidate k2 values with nominal clearance in (0, upper], return the
    one closest to target as (k1, k2, clearance).
    """
    if candidates is None:
        candidates = np.round(np.arange(-1.0, -5.001, -0.25), 2)
    best = None
    for k2 in candidates:
        clearance = nominal_clearance(k1, float(k2))
        logger.debug("k1=%g k2=%g nominal clearance %.5f", k1, k2, clearance)
        if not 0 < clearance <= upper:
            continue
        if best is None or abs(clearance - target) < abs(best[2] - target):
            best = (k1, float(k2), clearance)
    if best is None:
        msg = f"no candidate gain gives a nominal clearance in (0, {upper}]"
        raise SimulationError(msg)
    return best
