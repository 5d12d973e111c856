from __future__ import annotations

from collections.abc import Mapping
from collections.abc import Sequence
from dataclasses import dataclass
from dataclasses import field
from dataclasses import replace
from enum import StrEnum

import numpy as np

from active_testing.acquisition import BetaSchedule
from active_testing.acquisition import Domain
from active_testing.exceptions import ConfigError
from active_testing.gp import SquaredExponential

EMBEDDED_SUFFIX = "-embedded"


class Method(StrEnum):
    MULTI_GP = "multi-gp"
    SINGLE_GP = "single-gp"
    RANDOM = "random"


def parse_method(label: str) -> tuple[Method, bool]:
    """
    Split a method label into the method and whether it searches through a
    random embedding, e.g. "multi-gp-embedded" -> (Method.MULTI_GP, True).
    """
    embedded = label.endswith(EMBEDDED_SUFFIX)
    name = label.removesuffix(EMBEDDED_SUFFIX)
    try:
        method = Method(name)
    except ValueError:
        choices = ", ".join(
            [m.value for m in Method] + [f"{m.value}{EMBEDDED_SUFFIX}" for m in Method if m != Method.RANDOM],
        )
        msg = f"unknown method {label!r} (choose from {choices})"
        raise ConfigError(msg) from None
    if embedded and method == Method.RANDOM:
        msg = "the random baseline samples the full domain and cannot be embedded"
        raise ConfigError(msg)
    return method, embedded


@dataclass(frozen=True)
class OptimizerSettings:
    restarts: int = 50
    local_budget: int = 200
    simplex_scale: float = 0.05

    def __post_init__(self):
        if self.restarts < 1:
            msg = "optimizer.restarts must be at least 1"
            raise ConfigError(msg)
        if self.local_budget < 1:
            msg = "optimizer.local_budget must be at least 1"
            raise ConfigError(msg)
        if not 0 < self.simplex_scale <= 1:
            msg = "optimizer.simplex_scale must lie in (0, 1]"
            raise ConfigError(msg)


@dataclass(frozen=True)
class KernelSettings:
    """Hyperparameters of one predicate's GP; None means the domain-derived default."""

    signal_variance: float = 1.0
    lengthscales: tuple[float, ...] | None = None

    def kernel(self, domain: Domain) -> SquaredExponential:
        if self.lengthscales is None:
            return SquaredExponential.for_box(domain.lower, domain.upper, self.signal_variance)
        if len(self.lengthscales) != domain.dim:
            msg = f"gp.lengthscales has {len(self.lengthscales)} entries for a {domain.dim}-dimensional search space"
            raise ConfigError(msg)
        return SquaredExponential(self.signal_variance, np.asarray(self.lengthscales))


@dataclass(frozen=True)
class RunConfig:
    budget: int
    seed: int = 0
    method: Method = Method.MULTI_GP
    beta: BetaSchedule = field(default_factory=lambda: BetaSchedule.fixed(3.0))
    optimizer: OptimizerSettings = field(default_factory=OptimizerSettings)
    init_samples: int = 5
    embedding_dim: int | None = None
    embedded: bool = False
    noise_variance: float = 1e-4
    kernel: KernelSettings = field(default_factory=KernelSettings)
    overrides: Mapping[str, KernelSettings] = field(default_factory=dict)
    delta: float = 0.05
    verify: bool = False
    epsilon: float | None = None
    target: tuple[float, ...] | None = None
    tolerance: float = 0.1

    def __post_init__(self):
        object.__setattr__(self, "method", Method(self.method))
        if self.budget < 1:
            msg = f"run.budget must be at least 1, got {self.budget}"
            raise ConfigError(msg)
        if self.init_samples < 0:
            msg = "run.init_samples cannot be negative"
            raise ConfigError(msg)
        if not self.noise_variance > 0:
            msg = "gp.noise_variance must be positive"
            raise ConfigError(msg)
        if not 0 < self.delta < 1:
            msg = f"beta.delta must lie in (0, 1), got {self.delta!r}"
            raise ConfigError(msg)
        if self.embedded and not self.embedding_dim:
            msg = "embedded methods need optimizer.embedding_dim"
            raise ConfigError(msg)
        if self.epsilon is not None and not self.epsilon > 0:
            msg = "run.epsilon must be positive"
            raise ConfigError(msg)

    @property
    def label(self) -> str:
        return f"{self.method}{EMBEDDED_SUFFIX if self.embedded else ''}"

    def with_method(self, label: str) -> RunConfig:
        method, embedded = parse_method(label)
        return replace(self, method=method, embedded=embedded)

    def with_overrides(self, **changes) -> RunConfig:
        return replace(self, **{k: v for k, v in changes.items() if v is not None})

    def kernel_settings(self, predicate: str) -> KernelSettings:
        return self.overrides.get(predicate, self.kernel)

    def kernels(self, predicates: Sequence[str], domain: Domain) -> list[SquaredExponential]:
        return [self.kernel_settings(name).kernel(domain) for name in predicates]

    def to_dict(self) -> dict:
        return {
            "budget": self.budget,
            "seed": self.seed,
            "method": self.label,
            "beta": self.beta.to_dict(),
            "optimizer": {
                "restarts": self.optimizer.restarts,
                "local_budget": self.optimizer.local_budget,
                "simplex_scale": self.optimizer.simplex_scale,
                "embedding_dim": self.embedding_dim,
            },
            "init_samples": self.init_samples,
            "gp": {
                "noise_variance": self.noise_variance,
                "signal_variance": self.kernel.signal_variance,
                "lengthscales": list(self.kernel.lengthscales) if self.kernel.lengthscales else None,
                "overrides": {
                    name: {
                        "signal_variance": settings.signal_variance,
                        "lengthscales": list(settings.lengthscales) if settings.lengthscales else None,
                    }
                    for name, settings in sorted(self.overrides.items())
                },
            },
            "delta": self.delta,
            "verify": self.verify,
            "epsilon": self.epsilon,
            "target": list(self.target) if self.target is not None else None,
            "tolerance": self.tolerance,
        }
