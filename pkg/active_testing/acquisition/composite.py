from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from active_testing.exceptions import AcquisitionError
from active_testing.gp import GpModel
from active_testing.speclang import ParseTree
from active_testing.speclang import eval_pessimistic


def confidence_bounds(
    models: Sequence[GpModel],
    beta_sqrt: float,
    w: Sequence[float],
) -> tuple[list[float], list[float]]:
    """Per-predicate interval m_i(w) -/+ beta_sqrt * sigma_i(w)."""
    lower, upper = [], []
    for model in models:
        mean, variance = model.posterior(w)
        radius = beta_sqrt * math.sqrt(variance)
        lower.append(mean - radius)
        upper.append(mean + radius)
    return lower, upper


def composite_lcb(
    tree: ParseTree,
    models: Sequence[GpModel],
    beta_sqrt: float,
    w: Sequence[float],
) -> float:
    """
    Pessimistic robustness of the specification at w.

    Each positive leaf takes the lower end of its predicate's confidence
    interval and each negated leaf the negated upper end, so the value bounds
    the true robustness from below whenever every predicate lies inside its
    interval. With a single positive leaf this is the usual GP-LCB.
    """
    if len(models) != tree.arity:
        msg = f"{len(models)} models for a specification over {tree.arity} predicates"
        raise AcquisitionError(msg)
    if not (np.isfinite(beta_sqrt) and beta_sqrt >= 0):
        msg = f"beta_sqrt must be non-negative, got {beta_sqrt!r}"
        raise AcquisitionError(msg)
    lower, upper = confidence_bounds(models, beta_sqrt, w)
    return eval_pessimistic(tree, lower, upper)
