from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from active_testing.exceptions import DimensionError
from active_testing.exceptions import GpError

SQUARED_EXPONENTIAL = "squared-exponential"


@dataclass(frozen=True, eq=False)
class SquaredExponential:
    """
    k(w, w') = signal_variance * exp(-0.5 * sum_d ((w_d - w'_d) / lengthscale_d) ** 2)

    One lengthscale per input dimension.
    """

    signal_variance: float
    lengthscales: np.ndarray

    kind = SQUARED_EXPONENTIAL

    def __post_init__(self):
        lengthscales = np.array(self.lengthscales, dtype=float).reshape(-1)
        if not (np.isfinite(self.signal_variance) and self.signal_variance > 0):
            msg = f"signal variance must be positive, got {self.signal_variance!r}"
            raise GpError(msg)
        if lengthscales.size == 0 or not np.all(np.isfinite(lengthscales) & (lengthscales > 0)):
            msg = f"lengthscales must be positive and finite, got {lengthscales.tolist()}"
            raise GpError(msg)
        lengthscales.setflags(write=False)
        object.__setattr__(self, "signal_variance", float(self.signal_variance))
        object.__setattr__(self, "lengthscales", lengthscales)

    @classmethod
    def for_box(
        cls,
        lower: Sequence[float],
        upper: Sequence[float],
        signal_variance: float = 1.0,
    ) -> SquaredExponential:
        """Default hyperparameters: a quarter of the box width per dimension."""
        widths = np.asarray(upper, dtype=float) - np.asarray(lower, dtype=float)
        return cls(signal_variance, widths / 4.0)

    @property
    def dim(self) -> int:
        return self.lengthscales.size

    def __call__(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Cross-covariance matrix between the rows of a and the rows of b."""
        a = self._rows(a)
        b = self._rows(b)
        scaled = (a[:, None, :] - b[None, :, :]) / self.lengthscales
        return self.signal_variance * np.exp(-0.5 * np.einsum("ijk,ijk->ij", scaled, scaled))

    def diag(self, a: np.ndarray) -> np.ndarray:
        return np.full(self._rows(a).shape[0], self.signal_variance)

    def _rows(self, points: np.ndarray) -> np.ndarray:
        points = np.atleast_2d(np.asarray(points, dtype=float))
        if points.shape[1] != self.dim:
            msg = f"kernel expects {self.dim}-dimensional inputs, got {points.shape[1]}"
            raise DimensionError(msg)
        return points

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "signal_variance": self.signal_variance,
            "lengthscales": self.lengthscales.tolist(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> SquaredExponential:
        kind = data.get("kind", SQUARED_EXPONENTIAL)
        if kind != SQUARED_EXPONENTIAL:
            msg = f"unsupported kernel kind {kind!r}"
            raise GpError(msg)
        return cls(data["signal_variance"], data["lengthscales"])
