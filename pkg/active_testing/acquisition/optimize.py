"""
Multi-start minimisation of the acquisition function.

The composite acquisition has kinks wherever the min/max tree switches
branch, so candidates are refined with bounded Nelder-Mead rather than a
gradient method.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable

import numpy as np
from scipy.optimize import Bounds
from scipy.optimize import minimize

from active_testing.exceptions import AcquisitionError

from .domain import Domain

logger = logging.getLogger(__name__)

Objective = Callable[[np.ndarray], float]


class _BestSeen:
    """Objective wrapper remembering the best finite value; ties keep the earlier point."""

    def __init__(self, objective: Objective, domain: Domain):
        self.objective = objective
        self.domain = domain
        self.point: np.ndarray | None = None
        self.value = math.inf
        self.evaluations = 0

    def __call__(self, w: np.ndarray) -> float:
        point = np.clip(np.asarray(w, dtype=float), self.domain.lower, self.domain.upper)
        value = float(self.objective(point))
        self.evaluations += 1
        if not math.isfinite(value):
            return math.inf
        if value < self.value:
            self.point = point.copy()
            self.value = value
        return value


def initial_simplex(start: np.ndarray, domain: Domain, scale: float) -> np.ndarray:
    """start plus one vertex per axis, offset by scale * width and kept inside the box."""
    simplex = np.tile(start, (domain.dim + 1, 1))
    steps = scale * domain.widths
    for axis in range(domain.dim):
        vertex = start[axis] + steps[axis]
        if vertex > domain.upper[axis]:
            vertex = start[axis] - steps[axis]
        simplex[axis + 1, axis] = vertex
    return simplex


def minimize_acquisition(
    objective: Objective,
    domain: Domain,
    restarts: int,
    rng: np.random.Generator,
    *,
    local_budget: int = 200,
    simplex_scale: float = 0.05,
) -> tuple[np.ndarray, float]:
    """
    Approximate global minimiser of objective over domain.

    restarts uniform samples are evaluated, the best ceil(restarts / 10) of
    them are refined by bounded Nelder-Mead with at most local_budget
    evaluations each, and the best point seen anywhere is returned. Candidates
    with non-finite values are discarded.
    """
    if restarts < 1:
        msg = f"restarts must be at least 1, got {restarts}"
        raise AcquisitionError(msg)

    tracker = _BestSeen(objective, domain)
    samples = domain.sample(rng, restarts)
    values = np.array([tracker(w) for w in samples])
    if tracker.point is None:
        msg = f"all {restarts} acquisition samples were non-finite"
        raise AcquisitionError(msg)

    finite = np.flatnonzero(np.isfinite(values))
    ranked = finite[np.argsort(values[finite], kind="stable")]
    refine = ranked[: math.ceil(restarts / 10)]
    bounds = Bounds(domain.lower, domain.upper)
    for index in refine:
        minimize(
            tracker,
            samples[index],
            method="Nelder-Mead",
            bounds=bounds,
            options={
                "maxfev": local_budget,
                "initial_simplex": initial_simplex(samples[index], domain, simplex_scale),
                "xatol": 1e-10,
                "fatol": 1e-12,
            },
        )
    logger.debug(
        "acquisition minimum %.6g after %d evaluations (%d restarts, %d refined)",
        tracker.value,
        tracker.evaluations,
        restarts,
        refine.size,
    )
    return tracker.point, tracker.value
