"""Comparison methods sharing the RunResult schema of active_test."""

from __future__ import annotations

import logging

from active_testing.acquisition import Domain
from active_testing.envs import Environment
from active_testing.exceptions import ConfigError
from active_testing.exceptions import EngineError
from active_testing.exceptions import SimulationError
from active_testing.speclang import ParseTree
from active_testing.speclang import eval_tree

from .config import Method
from .config import RunConfig
from .diagnostics import convergence_iteration
from .loop import BayesianRun
from .loop import active_test
from .loop import as_tree
from .result import HistoryRow
from .result import Phase
from .result import RunResult
from .rng import RandomStreams

logger = logging.getLogger(__name__)


def run_baseline(
    spec: str | ParseTree,
    environment: Environment,
    config: RunConfig,
    domain: Domain | None = None,
) -> RunResult:
    """
    single-gp: one GP over the robustness itself, minimised with plain GP-LCB.
    random: config.budget uniform draws from the domain.
    """
    tree = as_tree(spec)
    if config.method == Method.SINGLE_GP:
        return BayesianRun(tree, environment, config, domain).run()
    if config.method == Method.RANDOM:
        return _random_search(tree, environment, config, domain or environment.domain)
    msg = f"{config.method} is not a baseline method"
    raise ConfigError(msg)


def run_method(
    spec: str | ParseTree,
    environment: Environment,
    config: RunConfig,
    domain: Domain | None = None,
) -> RunResult:
    if config.method == Method.MULTI_GP:
        return active_test(spec, environment, config, domain)
    return run_baseline(spec, environment, config, domain)


def _random_search(
    tree: ParseTree,
    environment: Environment,
    config: RunConfig,
    domain: Domain,
) -> RunResult:
    environment.require(tree.predicates)
    rng = RandomStreams(config.seed)["random-baseline"]
    result = RunResult(method=config.label, seed=config.seed, predicates=tree.predicates)
    with environment:
        for iteration, w in enumerate(domain.sample(rng, config.budget), start=1):
            try:
                evaluation = environment.evaluate(w, tree.predicates)
            except SimulationError as exc:
                logger.exception("Run failed at iteration %d", iteration)
                raise EngineError(str(exc), iteration) from exc
            phi = eval_tree(tree, [evaluation.mu[name] for name in tree.predicates])
            if not result.history or phi < result.worst_phi:
                result.worst_trajectory = evaluation.trajectory
            result.history.append(
                HistoryRow(
                    index=iteration - 1,
                    phase=Phase.RANDOM,
                    iteration=iteration,
                    w=tuple(float(v) for v in w),
                    mu=dict(evaluation.mu),
                    phi=phi,
                ),
            )
    if config.target is not None:
        result.convergence_iteration = convergence_iteration(result, config.target, config.tolerance)
    return result
