from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from active_testing.exceptions import SimulationError

from .trajectory import Trajectory

SINCOS_DOMAIN = ((0.0,), (10.0,))


def simulate_sincos(w: Sequence[float], amplitude: float = 1.0) -> Trajectory:
    """
    Synthetic one-parameter system with channels sin = A sin(w) and cos = A cos(w).

    Bound with offsets 0.65 and the specification "mu1 or mu2" its robustness
    is max(sin w, cos w) + 0.65, which dips below zero around 5 pi / 4.
    """
    point = np.asarray(w, dtype=float).reshape(-1)
    if point.size != 1:
        msg = f"the sin/cos system takes one parameter, got {point.size}"
        raise SimulationError(msg)
    value = float(point[0])
    return Trajectory.single(sin=amplitude * math.sin(value), cos=amplitude * math.cos(value))
