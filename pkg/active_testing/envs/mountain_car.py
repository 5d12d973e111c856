"""
Mountain car with an energy-pumping controller.

w = (x_init, v_init, x_goal, v_max, p_max). The controller always pushes in the
direction of motion, which is enough to climb the hill for the default box.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from active_testing.exceptions import SimulationError

from .trajectory import Trajectory

MOUNTAIN_CAR_DOMAIN = (
    (-0.6, -0.025, 0.4, 0.55, 0.0005),
    (-0.4, 0.025, 0.6, 0.75, 0.0025),
)
MOUNTAIN_CAR_PARAMETERS = ("x_init", "v_init", "x_goal", "v_max", "p_max")
MIN_POSITION = -1.2
MAX_POSITION = 0.6
GRAVITY = 0.0025


def _action(v: float) -> float:
    return 1.0 if v >= 0 else -1.0


def simulate_mountain_car(
    w: Sequence[float],
    domain: tuple[Sequence[float], Sequence[float]] = MOUNTAIN_CAR_DOMAIN,
    max_steps: int = 500,
) -> Trajectory:
    """
    Run until x >= x_goal or max_steps steps have been taken.

    Timestamps are step indices. The horizon is max_steps, also when the
    goal stops the run early. Besides x, v and a the trajectory carries
    goal_gap = x - x_goal and displacement = x - x_init.
    """
    point = np.asarray(w, dtype=float).reshape(-1)
    if point.size != len(MOUNTAIN_CAR_PARAMETERS):
        msg = f"the mountain car takes {len(MOUNTAIN_CAR_PARAMETERS)} parameters, got {point.size}"
        raise SimulationError(msg)
    lower, upper = np.asarray(domain[0], dtype=float), np.asarray(domain[1], dtype=float)
    outside = [
        name
        for name, value, lo, hi in zip(MOUNTAIN_CAR_PARAMETERS, point, lower, upper, strict=True)
        if not lo <= value <= hi
    ]
    if outside:
        msg = f"mountain car parameters outside their range: {', '.join(outside)}"
        raise SimulationError(msg)

    x_init, v_init, x_goal, v_max, p_max = point
    xs, vs, actions = [x_init], [v_init], []
    x, v = x_init, v_init
    for _ in range(max_steps):
        if x >= x_goal:
            break
        action = _action(v)
        actions.append(action)
        v = float(np.clip(v + p_max * action - GRAVITY * np.cos(3 * x), -v_max, v_max))
        x = float(np.clip(x + v, MIN_POSITION, MAX_POSITION))
        if x == MIN_POSITION and v < 0:
            v = 0.0
        xs.append(x)
        vs.append(v)
    actions.append(_action(v))

    x_arr = np.array(xs)
    return Trajectory(
        t=np.arange(x_arr.size, dtype=float),
        channels={
            "x": x_arr,
            "v": np.array(vs),
            "a": np.array(actions),
            "goal_gap": x_arr - x_goal,
            "displacement": x_arr - x_init,
        },
        horizon=float(max_steps),
    )
