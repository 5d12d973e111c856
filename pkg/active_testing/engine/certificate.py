from __future__ import annotations

import logging
from collections.abc import Sequence

import numpy as np

from active_testing.acquisition import Domain
from active_testing.acquisition import composite_lcb
from active_testing.acquisition import minimize_acquisition
from active_testing.exceptions import AcquisitionError
from active_testing.gp import GpModel
from active_testing.speclang import ParseTree

from .config import OptimizerSettings
from .result import Certificate

logger = logging.getLogger(__name__)

HEURISTIC_OPTIMUM = "heuristic global optimum"
EMBEDDED_SUBSPACE = "embedded subspace only"


def check_certificate(  # noqa: PLR0913
    tree: ParseTree,
    models: Sequence[GpModel],
    beta_sqrt: float,
    domain: Domain,
    optimizer: OptimizerSettings,
    rng: np.random.Generator,
    *,
    delta: float = 0.05,
    embedded: bool = False,
) -> Certificate:
    """
    Certify the specification when the composite lower confidence bound is
    positive everywhere on the domain.

    The minimum is found by multi-start search, so the certificate is only as
    good as that search; it carries a caveat saying so.
    """
    if any(model.n == 0 for model in models):
        msg = "a certificate needs at least one measurement per predicate"
        raise AcquisitionError(msg)
    w, value = minimize_acquisition(
        lambda w: composite_lcb(tree, models, beta_sqrt, w),
        domain,
        optimizer.restarts,
        rng,
        local_budget=optimizer.local_budget,
        simplex_scale=optimizer.simplex_scale,
    )
    certificate = certificate_from_minimum(value, w, beta_sqrt, delta=delta, embedded=embedded)
    if certificate.verified:
        logger.info("Specification verified: acquisition minimum %.6g > 0 (beta_sqrt %.4g)", value, beta_sqrt)
    return certificate


def certificate_from_minimum(
    value: float,
    w: Sequence[float],
    beta_sqrt: float,
    *,
    delta: float,
    embedded: bool = False,
) -> Certificate:
    """Certificate for an already minimised acquisition."""
    return Certificate(
        verified=value > 0,
        acquisition_min=float(value),
        w=tuple(float(v) for v in w),
        beta_sqrt=beta_sqrt,
        delta=delta,
        caveats=(HEURISTIC_OPTIMUM, EMBEDDED_SUBSPACE) if embedded else (HEURISTIC_OPTIMUM,),
    )
