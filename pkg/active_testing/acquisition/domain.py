from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from active_testing.exceptions import ConfigError
from active_testing.exceptions import DimensionError


@dataclass(frozen=True, eq=False)
class Domain:
    """Axis-aligned box of environment parameters."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.array(self.lower, dtype=float).reshape(-1)
        upper = np.array(self.upper, dtype=float).reshape(-1)
        if lower.shape != upper.shape or lower.size == 0:
            msg = f"bounds have mismatched sizes {lower.size} and {upper.size}"
            raise DimensionError(msg)
        if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
            msg = "domain bounds must be finite"
            raise ConfigError(msg)
        if not np.all(lower < upper):
            msg = f"domain lower bound {lower.tolist()} is not below upper bound {upper.tolist()}"
            raise ConfigError(msg)
        lower.setflags(write=False)
        upper.setflags(write=False)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    def __eq__(self, other):
        if not isinstance(other, Domain):
            return NotImplemented
        return np.array_equal(self.lower, other.lower) and np.array_equal(self.upper, other.upper)

    __hash__ = None

    @property
    def dim(self) -> int:
        return self.lower.size

    @property
    def widths(self) -> np.ndarray:
        return self.upper - self.lower

    @property
    def center(self) -> np.ndarray:
        return (self.lower + self.upper) / 2

    def contains(self, w: Sequence[float]) -> bool:
        point = self.check(w)
        return bool(np.all(point >= self.lower) and np.all(point <= self.upper))

    def clip(self, w: Sequence[float]) -> np.ndarray:
        return np.clip(self.check(w), self.lower, self.upper)

    def check(self, w: Sequence[float]) -> np.ndarray:
        point = np.asarray(w, dtype=float).reshape(-1)
        if point.size != self.dim:
            msg = f"expected a {self.dim}-dimensional point, got {point.size} coordinates"
            raise DimensionError(msg)
        return point

    def sample(self, rng: np.random.Generator, count: int) -> np.ndarray:
        """count points drawn uniformly from the box, one per row."""
        return self.lower + rng.random((count, self.dim)) * self.widths

    def to_dict(self) -> dict:
        return {"lower": self.lower.tolist(), "upper": self.upper.tolist()}
