"""
Convergence diagnostics derived from the regret bound.

With C1 = 8 / log(1 + 1 / noise_variance), the simple regret after n search
iterations is bounded by

    sqrt(C1 * beta_n * gamma_n / n)

where beta_n is the squared confidence scaling and gamma_n the information
capacity. The realized mutual information stands in for gamma_n, so the
reported bound is itself an estimate.
"""

from __future__ import annotations

import math

import numpy as np

from .result import Diagnostics
from .result import RunResult


def c1_constant(noise_variance: float) -> float:
    return 8 / math.log(1 + 1 / noise_variance)


def regret_bound(c1: float, beta_sqrt: float, information: float, n: int) -> float:
    return math.sqrt(c1 * beta_sqrt**2 * information / n)


def convergence_diagnostics(
    result: RunResult,
    noise_variance: float,
    epsilon: float | None = None,
) -> Diagnostics | None:
    """
    Per-iteration regret bounds of a Bayesian run and, given epsilon, the first
    iteration n* whose bound is at most epsilon.

    epsilon_verified holds when n* was reached and every observed phi exceeds
    epsilon. Returns None for runs without search iterations.
    """
    rows = [row for row in result.search_rows if row.beta_sqrt is not None]
    if not rows:
        return None
    c1 = c1_constant(noise_variance)
    betas = tuple(row.beta_sqrt for row in rows)
    information = tuple(row.information or 0.0 for row in rows)
    bounds = tuple(
        regret_bound(c1, beta, info, n)
        for n, (beta, info) in enumerate(zip(betas, information, strict=True), start=1)
    )
    n_star = None
    if epsilon is not None:
        reached = np.flatnonzero(np.asarray(bounds) <= epsilon)
        n_star = int(reached[0]) + 1 if reached.size else None
    return Diagnostics(
        c1=c1,
        beta_sqrt=betas,
        information=information,
        regret_bound=bounds,
        epsilon=epsilon,
        n_star=n_star,
        epsilon_verified=n_star is not None and result.worst_phi > epsilon,
    )


def convergence_iteration(
    result: RunResult,
    target: tuple[float, ...],
    tolerance: float,
) -> int | None:
    """
    First search iteration from which the best-so-far point stays within
    tolerance (max-norm) of target; None if it never settles.
    """
    target_arr = np.asarray(target, dtype=float)
    best_phi = math.inf
    best_w = None
    settled_since = None
    for row in result.history:
        if row.phi < best_phi:
            best_phi, best_w = row.phi, np.asarray(row.w)
        if row.phase == "init":
            continue
        close = best_w is not None and float(np.max(np.abs(best_w - target_arr))) <= tolerance
        if close and settled_since is None:
            settled_since = row.iteration
        elif not close:
            settled_since = None
    return settled_since
