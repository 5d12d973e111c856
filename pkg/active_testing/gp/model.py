"""
Zero-mean Gaussian-process regression with incremental Cholesky updates.

A GpModel is an immutable snapshot: add_observation returns a new model whose
Cholesky factor is the old one bordered by one row, so each update costs one
triangular solve instead of a refactorisation. Posterior queries never mutate
a model and may run concurrently.

The Gram matrix carries a jitter of 1e-9 * signal_variance on its diagonal.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from active_testing.exceptions import CholeskyBreakdownError
from active_testing.exceptions import DimensionError
from active_testing.exceptions import GpError

from .kernels import SquaredExponential

logger = logging.getLogger(__name__)

JITTER = 1e-9


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class GpModel:
    kernel: SquaredExponential
    noise_variance: float
    inputs: np.ndarray
    outputs: np.ndarray
    cholesky: np.ndarray
    information: float = 0.0

    @classmethod
    def empty(cls, kernel: SquaredExponential, noise_variance: float) -> GpModel:
        if not (math.isfinite(noise_variance) and noise_variance > 0):
            msg = f"noise variance must be positive, got {noise_variance!r}"
            raise GpError(msg)
        return cls(
            kernel=kernel,
            noise_variance=float(noise_variance),
            inputs=_frozen(np.empty((0, kernel.dim))),
            outputs=_frozen(np.empty(0)),
            cholesky=_frozen(np.empty((0, 0))),
        )

    @property
    def dim(self) -> int:
        return self.kernel.dim

    @property
    def n(self) -> int:
        return self.outputs.size

    @property
    def jitter(self) -> float:
        return JITTER * self.kernel.signal_variance

    # Prediction
    # --------------------------------------------------------------------------
    def predict(self, points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Posterior mean and variance at each row of points."""
        points = self._check_points(points)
        prior = self.kernel.diag(points)
        if self.n == 0:
            return np.zeros(points.shape[0]), prior
        cross = self.kernel(self.inputs, points)
        projected = solve_triangular(self.cholesky, cross, lower=True)
        alpha = solve_triangular(self.cholesky, self.outputs, lower=True)
        mean = projected.T @ alpha
        variance = prior - np.einsum("ij,ij->j", projected, projected)
        return mean, np.maximum(variance, 0.0)

    def posterior(self, w: Sequence[float]) -> tuple[float, float]:
        mean, variance = self.predict(self._check_point(w)[None, :])
        return float(mean[0]), float(variance[0])

    # Conditioning
    # --------------------------------------------------------------------------
    def add_observation(self, w: Sequence[float], y: float) -> GpModel:
        """
        Condition on one more measurement y at w.

        The factor of K + noise * I is extended by bordering:

            L' = [[L, 0], [l^T, d]],  l = L^-1 k(W, w),
            d^2 = k(w, w) + jitter + noise - l^T l

        and the mutual information grows by log(d^2 / noise), which is
        log(1 + sigma_prior^2(w) / noise) up to the jitter.
        """
        point = self._check_point(w)
        y = float(y)
        if not math.isfinite(y):
            msg = f"observation at w={point.tolist()} is not finite ({y!r})"
            raise GpError(msg)

        n = self.n
        diagonal = self.kernel.signal_variance + self.jitter + self.noise_variance
        if n:
            border = solve_triangular(
                self.cholesky,
                self.kernel(self.inputs, point[None, :])[:, 0],
                lower=True,
            )
            pivot = diagonal - float(border @ border)
        else:
            border = np.empty(0)
            pivot = diagonal
        if not (math.isfinite(pivot) and pivot > 0):
            logger.warning("Cholesky bordering failed at w=%s (pivot %r)", point.tolist(), pivot)
            raise CholeskyBreakdownError(point, pivot)

        cholesky = np.zeros((n + 1, n + 1))
        cholesky[:n, :n] = self.cholesky
        cholesky[n, :n] = border
        cholesky[n, n] = math.sqrt(pivot)
        return GpModel(
            kernel=self.kernel,
            noise_variance=self.noise_variance,
            inputs=_frozen(np.vstack([self.inputs, point])),
            outputs=_frozen(np.append(self.outputs, y)),
            cholesky=_frozen(cholesky),
            information=self.information + math.log(pivot / self.noise_variance),
        )

    def mutual_information(self) -> float:
        """
        Information gained from the measurements so far, sum_j log(1 + sigma_{j-1}^2(w_j) / noise).

        Written without the conventional factor 1/2, so it equals
        log det(I + K_n / noise) for the jittered Gram matrix K_n.
        """
        return self.information

    def gram_matrix(self) -> np.ndarray:
        """K_n including the jitter, without the noise term."""
        if self.n == 0:
            return np.empty((0, 0))
        return self.kernel(self.inputs, self.inputs) + self.jitter * np.eye(self.n)

    # Serialization
    # --------------------------------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "kernel": self.kernel.to_dict(),
            "noise_variance": self.noise_variance,
            "inputs": self.inputs.tolist(),
            "outputs": self.outputs.tolist(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> GpModel:
        """Rebuild a model; the factor and the information are recomputed point by point."""
        model = cls.empty(SquaredExponential.from_dict(data["kernel"]), data["noise_variance"])
        inputs = data.get("inputs", [])
        outputs = data.get("outputs", [])
        if len(inputs) != len(outputs):
            msg = f"{len(inputs)} inputs but {len(outputs)} outputs"
            raise GpError(msg)
        for w, y in zip(inputs, outputs, strict=True):
            model = model.add_observation(w, y)
        return model

    # Validation
    # --------------------------------------------------------------------------
    def _check_point(self, w: Sequence[float]) -> np.ndarray:
        point = np.asarray(w, dtype=float).reshape(-1)
        if point.size != self.dim:
            msg = f"expected a {self.dim}-dimensional point, got {point.size} coordinates"
            raise DimensionError(msg)
        if not np.all(np.isfinite(point)):
            msg = f"point {point.tolist()} is not finite"
            raise DimensionError(msg)
        return point

    def _check_points(self, points: np.ndarray) -> np.ndarray:
        points = np.atleast_2d(np.asarray(points, dtype=float))
        if points.shape[1] != self.dim:
            msg = f"expected {self.dim}-dimensional points, got {points.shape[1]}"
            raise DimensionError(msg)
        if not np.all(np.isfinite(points)):
            msg = "query points are not finite"
            raise DimensionError(msg)
        return points
