from __future__ import annotations

import math
from collections.abc import Mapping
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from active_testing.exceptions import SimulationError


@dataclass(frozen=True, eq=False)
class Trajectory:
    """
    Timestamps plus named channels sampled at those timestamps.

    horizon is the time the simulation was allowed to run. It is at least the
    last timestamp and exceeds it when the run ended early.
    """

    t: np.ndarray
    channels: Mapping[str, np.ndarray]
    horizon: float | None = None

    def __post_init__(self):
        t = np.array(self.t, dtype=float).reshape(-1)
        if t.size == 0:
            msg = "trajectory has no samples"
            raise SimulationError(msg)
        if not np.all(np.isfinite(t)) or np.any(np.diff(t) <= 0):
            msg = "trajectory timestamps must be finite and strictly increasing"
            raise SimulationError(msg)
        if self.horizon is not None:
            horizon = float(self.horizon)
            if not math.isfinite(horizon) or horizon < t[-1]:
                msg = f"trajectory horizon {horizon!r} ends before the last timestamp {t[-1]!r}"
                raise SimulationError(msg)
            object.__setattr__(self, "horizon", horizon)
        channels = {}
        for name, values in self.channels.items():
            array = np.array(values, dtype=float).reshape(-1)
            if array.size != t.size:
                msg = f"channel {name!r} has {array.size} samples, expected {t.size}"
                raise SimulationError(msg)
            if not np.all(np.isfinite(array)):
                msg = f"channel {name!r} has non-finite samples"
                raise SimulationError(msg)
            array.setflags(write=False)
            channels[name] = array
        t.setflags(write=False)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "channels", channels)

    def __len__(self) -> int:
        return self.t.size

    def __getitem__(self, name: str) -> np.ndarray:
        try:
            return self.channels[name]
        except KeyError:
            available = ", ".join(sorted(self.channels)) or "none"
            msg = f"trajectory has no channel {name!r} (available: {available})"
            raise SimulationError(msg) from None

    def __eq__(self, other):
        if not isinstance(other, Trajectory):
            return NotImplemented
        return (
            np.array_equal(self.t, other.t)
            and self.horizon == other.horizon
            and self.channels.keys() == other.channels.keys()
            and all(np.array_equal(self.channels[k], other.channels[k]) for k in self.channels)
        )

    __hash__ = None

    @property
    def end(self) -> float:
        """horizon when known, else the last timestamp."""
        return float(self.t[-1]) if self.horizon is None else self.horizon

    def to_dict(self) -> dict:
        data = {
            "t": self.t.tolist(),
            "channels": {name: values.tolist() for name, values in self.channels.items()},
        }
        if self.horizon is not None:
            data["horizon"] = self.horizon
        return data

    @classmethod
    def from_dict(cls, data: Mapping) -> Trajectory:
        try:
            return cls(t=data["t"], channels=data["channels"], horizon=data.get("horizon"))
        except (KeyError, TypeError, ValueError) as exc:
            msg = f"malformed trajectory: {exc}"
            raise SimulationError(msg) from exc

    @classmethod
    def single(cls, **channels: float | Sequence[float]) -> Trajectory:
        """One-sample trajectory at t = 0."""
        return cls(t=[0.0], channels={k: np.atleast_1d(v) for k, v in channels.items()})
