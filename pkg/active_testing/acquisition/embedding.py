"""
Random linear embeddings for high-dimensional environment boxes.

The optimiser searches a d-dimensional box [-sqrt(d), sqrt(d)]^d; a point y is
mapped into the D-dimensional domain through a fixed Gaussian matrix A and
clipped to the box.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from active_testing.exceptions import DimensionError

from .domain import Domain


@dataclass(frozen=True, eq=False)
class Embedding:
    matrix: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=float)
        if matrix.ndim != 2 or 0 in matrix.shape:  # noqa: PLR2004
            msg = f"embedding matrix must be a non-empty D x d array, got shape {matrix.shape}"
            raise DimensionError(msg)
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def random(cls, ambient_dim: int, low_dim: int, rng: np.random.Generator) -> Embedding:
        if not 1 <= low_dim <= ambient_dim:
            msg = f"embedding dimension {low_dim} must lie in [1, {ambient_dim}]"
            raise DimensionError(msg)
        return cls(rng.standard_normal((ambient_dim, low_dim)))

    @property
    def ambient_dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def low_dim(self) -> int:
        return self.matrix.shape[1]

    @property
    def low_domain(self) -> Domain:
        bound = math.sqrt(self.low_dim)
        return Domain(np.full(self.low_dim, -bound), np.full(self.low_dim, bound))

    def embed(self, y: Sequence[float], domain: Domain) -> np.ndarray:
        return embed(self, y, domain)


def embed(embedding: Embedding, y: Sequence[float], domain: Domain) -> np.ndarray:
    """w = clip(center + (A y) * half_widths) into domain."""
    y = np.asarray(y, dtype=float).reshape(-1)
    if y.size != embedding.low_dim:
        msg = f"expected a {embedding.low_dim}-dimensional point, got {y.size} coordinates"
        raise DimensionError(msg)
    if domain.dim != embedding.ambient_dim:
        msg = f"embedding maps into {embedding.ambient_dim} dimensions, domain has {domain.dim}"
        raise DimensionError(msg)
    w = domain.center + (embedding.matrix @ y) * (domain.widths / 2)
    return np.clip(w, domain.lower, domain.upper)
