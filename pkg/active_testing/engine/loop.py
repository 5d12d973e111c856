"""
Active testing with Bayesian optimisation.

Every predicate of the specification gets its own GP over the environment
parameters. Each iteration minimises the composite lower confidence bound of
the specification's robustness, simulates the minimiser, and conditions every
GP on the predicate values it produced.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import replace

import numpy as np

from active_testing.acquisition import Domain
from active_testing.acquisition import Embedding
from active_testing.acquisition import beta_sqrt_at
from active_testing.acquisition import composite_lcb
from active_testing.acquisition import minimize_acquisition
from active_testing.envs import Environment
from active_testing.envs import Evaluation
from active_testing.exceptions import AcquisitionError
from active_testing.exceptions import ConfigError
from active_testing.exceptions import EngineError
from active_testing.exceptions import GpError
from active_testing.exceptions import SimulationError
from active_testing.gp import GpModel
from active_testing.speclang import Leaf
from active_testing.speclang import ParseTree
from active_testing.speclang import compile_spec
from active_testing.speclang import eval_tree

from .certificate import certificate_from_minimum
from .certificate import check_certificate
from .config import Method
from .config import RunConfig
from .diagnostics import convergence_diagnostics
from .diagnostics import convergence_iteration
from .result import Certificate
from .result import HistoryRow
from .result import Phase
from .result import RunResult
from .rng import RandomStreams

logger = logging.getLogger(__name__)

SINGLE_OBJECTIVE = ParseTree(root=Leaf(0), predicates=("phi",))


def as_tree(spec: str | ParseTree) -> ParseTree:
    return compile_spec(spec) if isinstance(spec, str) else spec


def active_test(
    spec: str | ParseTree,
    environment: Environment,
    config: RunConfig,
    domain: Domain | None = None,
) -> RunResult:
    """
    Search for a counterexample with one GP per predicate.

    config.init_samples uniform evaluations seed the models before
    config.budget search iterations. With config.verify the run stops as
    soon as the specification is certified or falsified.
    """
    if config.method != Method.MULTI_GP:
        msg = f"active_test runs the multi-gp method, not {config.method}"
        raise ConfigError(msg)
    return BayesianRun(as_tree(spec), environment, config, domain).run()


class BayesianRun:
    """State of one Bayesian-optimisation run, for multi-gp and single-gp alike."""

    def __init__(
        self,
        tree: ParseTree,
        environment: Environment,
        config: RunConfig,
        domain: Domain | None = None,
    ):
        environment.require(tree.predicates)
        self.tree = tree
        self.environment = environment
        self.config = config
        self.domain = domain or environment.domain
        self.streams = RandomStreams(config.seed)
        self.single = config.method == Method.SINGLE_GP
        # the GPs see the specification through this tree
        self.model_tree = SINGLE_OBJECTIVE if self.single else tree

        self.embedding: Embedding | None = None
        self.search_domain = self.domain
        if config.embedded:
            self.embedding = Embedding.random(self.domain.dim, config.embedding_dim, self.streams["embedding"])
            self.search_domain = self.embedding.low_domain

        kernels = config.kernels(self.model_tree.predicates, self.search_domain)
        self.models = [GpModel.empty(kernel, config.noise_variance) for kernel in kernels]
        self.result = RunResult(method=config.label, seed=config.seed, predicates=tree.predicates)

    def to_environment(self, y: np.ndarray) -> np.ndarray:
        if self.embedding is None:
            return np.asarray(y, dtype=float)
        return self.embedding.embed(y, self.domain)

    # Steps
    # --------------------------------------------------------------------------
    def run(self) -> RunResult:
        with self.environment:
            self._initialise()
            for iteration in range(1, self.config.budget + 1):
                if self._iterate(iteration):
                    self.result.stopped_early = True
                    break
            if self.result.certificate is None:
                self.result.certificate = self._guarded(
                    len(self.result.search_rows) + 1,
                    self._certify,
                    len(self.result.search_rows) + 1,
                )
        self._finish()
        return self.result

    def _initialise(self) -> None:
        rng = self.streams["init-samples"]
        for _ in range(self.config.init_samples):
            y = self.search_domain.sample(rng, 1)[0]
            self._record(y, Phase.INIT, 0)

    def _iterate(self, iteration: int) -> bool:
        """One search step; True when the run should stop early."""
        beta_sqrt, y, acquisition = self._guarded(iteration, self._propose, iteration)
        if self.config.verify and acquisition > 0:
            self.result.certificate = certificate_from_minimum(
                acquisition,
                self.to_environment(y),
                beta_sqrt,
                delta=self.config.delta,
                embedded=self.embedding is not None,
            )
            return True
        row = self._record(y, Phase.SEARCH, iteration, beta_sqrt=beta_sqrt, acquisition=acquisition)
        logger.debug(
            "iteration %d: phi=%.6g beta_sqrt=%.4g acquisition=%.6g w[0]=%.6g",
            iteration,
            row.phi,
            beta_sqrt,
            acquisition,
            row.w[0],
        )
        if self.config.verify and row.phi <= 0:
            logger.info("Counterexample at iteration %d: phi=%.6g", iteration, row.phi)
            return True
        return False

    def _propose(self, iteration: int) -> tuple[float, np.ndarray, float]:
        beta_sqrt = beta_sqrt_at(self.config.beta, self.models, iteration)
        y, value = minimize_acquisition(
            lambda y: composite_lcb(self.model_tree, self.models, beta_sqrt, y),
            self.search_domain,
            self.config.optimizer.restarts,
            self.streams["optimizer-restarts"],
            local_budget=self.config.optimizer.local_budget,
            simplex_scale=self.config.optimizer.simplex_scale,
        )
        return beta_sqrt, y, value

    def _certify(self, iteration: int) -> Certificate:
        beta_sqrt = beta_sqrt_at(self.config.beta, self.models, iteration)
        certificate = check_certificate(
            self.model_tree,
            self.models,
            beta_sqrt,
            self.search_domain,
            self.config.optimizer,
            self.streams["optimizer-restarts"],
            delta=self.config.delta,
            embedded=self.embedding is not None,
        )
        return replace(certificate, w=tuple(float(v) for v in self.to_environment(certificate.w)))

    def _record(self, y: np.ndarray, phase: Phase, iteration: int, **extra) -> HistoryRow:
        w = self.to_environment(y)
        evaluation = self._guarded(iteration, self.environment.evaluate, w, self.tree.predicates)
        phi = eval_tree(self.tree, [evaluation.mu[name] for name in self.tree.predicates])
        targets = [phi] if self.single else [evaluation.mu[name] for name in self.tree.predicates]
        self.models = self._guarded(
            iteration,
            lambda: [model.add_observation(y, value) for model, value in zip(self.models, targets, strict=True)],
        )
        row = HistoryRow(
            index=len(self.result.history),
            phase=phase,
            iteration=iteration,
            w=tuple(float(v) for v in w),
            mu=dict(evaluation.mu),
            phi=phi,
            information=sum(model.mutual_information() for model in self.models),
            **extra,
        )
        self._append(row, evaluation)
        return row

    def _append(self, row: HistoryRow, evaluation: Evaluation) -> None:
        if not self.result.history or row.phi < self.result.worst_phi:
            self.result.worst_trajectory = evaluation.trajectory
            if self.result.history:
                logger.info("New worst result at row %d: phi=%.6g", row.index, row.phi)
        self.result.history.append(row)

    def _guarded(self, iteration: int, step: Callable, *args):
        try:
            return step(*args)
        except (SimulationError, AcquisitionError, GpError) as exc:
            logger.exception("Run failed at iteration %d", iteration)
            raise EngineError(str(exc), iteration) from exc

    def _finish(self) -> None:
        self.result.diagnostics = convergence_diagnostics(
            self.result,
            self.config.noise_variance,
            self.config.epsilon,
        )
        if self.config.target is not None:
            self.result.convergence_iteration = convergence_iteration(
                self.result,
                self.config.target,
                self.config.tolerance,
            )
