"""
Predicate functionals: maps from a trajectory to one robustness value.

Every binding reads one channel x and forms the pointwise expression

    expr(t) = offset + gain * x(t)        (or gain * |x(t)| when absolute)

which the functional then reduces over time. A predicate is satisfied when
its value is positive.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from active_testing.exceptions import ConfigError

from .trajectory import Trajectory


@dataclass(frozen=True)
class PredicateBinding:
    name: str
    functional: str
    channel: str
    gain: float = 1.0
    offset: float = 0.0
    absolute: bool = False
    threshold: float = 0.0
    limit: float | None = None

    def __post_init__(self):
        if self.functional not in FUNCTIONALS:
            choices = ", ".join(sorted(FUNCTIONALS))
            msg = f"predicates.{self.name}.functional: unknown functional {self.functional!r} (choose from {choices})"
            raise ConfigError(msg)
        if self.limit is not None and self.limit <= 0:
            msg = f"predicates.{self.name}.limit must be positive"
            raise ConfigError(msg)

    def signal(self, trajectory: Trajectory) -> np.ndarray:
        values = trajectory[self.channel]
        return np.abs(values) if self.absolute else values

    def expression(self, trajectory: Trajectory) -> np.ndarray:
        return self.offset + self.gain * self.signal(trajectory)


def _minimum(binding: PredicateBinding, trajectory: Trajectory) -> float:
    return float(np.min(binding.expression(trajectory)))


def _maximum(binding: PredicateBinding, trajectory: Trajectory) -> float:
    return float(np.max(binding.expression(trajectory)))


def _terminal(binding: PredicateBinding, trajectory: Trajectory) -> float:
    return float(binding.expression(trajectory)[-1])


def _time_to_threshold(binding: PredicateBinding, trajectory: Trajectory) -> float:
    """
    (limit - t_hit) / limit, where t_hit is the first time expr >= threshold.

    An expression that never reaches the threshold counts as hitting it at the
    end of the trajectory: its horizon, or the last timestamp when the
    simulator gives none. limit defaults to that same end time.
    """
    t = trajectory.t
    end = trajectory.end
    limit = binding.limit if binding.limit is not None else end
    if limit <= 0:
        msg = f"predicate {binding.name!r} needs a positive time limit"
        raise ConfigError(msg)
    reached = np.flatnonzero(binding.expression(trajectory) >= binding.threshold)
    t_hit = float(t[reached[0]]) if reached.size else end
    return (limit - t_hit) / limit


def _total_variation(binding: PredicateBinding, trajectory: Trajectory) -> float:
    """offset + gain * sum_t |x(t+1) - x(t)|."""
    variation = float(np.sum(np.abs(np.diff(binding.signal(trajectory)))))
    return binding.offset + binding.gain * variation


FUNCTIONALS: dict[str, Callable[[PredicateBinding, Trajectory], float]] = {
    "min": _minimum,
    "max": _maximum,
    "terminal": _terminal,
    "time_to_threshold": _time_to_threshold,
    "total_variation": _total_variation,
}


def eval_predicate(binding: PredicateBinding, trajectory: Trajectory) -> float:
    """mu(trajectory) for one binding; raises SimulationError on a missing channel."""
    return FUNCTIONALS[binding.functional](binding, trajectory)
