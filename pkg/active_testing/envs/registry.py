"""Environment kinds, their default domains and predicate bindings."""

from __future__ import annotations

import functools
import logging
from collections.abc import Callable
from collections.abc import Mapping
from collections.abc import Sequence
from dataclasses import dataclass
from dataclasses import field
from enum import StrEnum
from typing import Any

import numpy as np

from active_testing.acquisition import Domain
from active_testing.exceptions import ConfigError
from active_testing.exceptions import SimulationError

from .car import CAR_GAINS
from .car import CAR_HORIZON
from .car import car_domain
from .car import simulate_car
from .external import ExternalSimulator
from .external import ReplyMode
from .functionals import PredicateBinding
from .functionals import eval_predicate
from .mountain_car import MOUNTAIN_CAR_DOMAIN
from .mountain_car import simulate_mountain_car
from .sincos import SINCOS_DOMAIN
from .sincos import simulate_sincos
from .trajectory import Trajectory

logger = logging.getLogger(__name__)


class EnvKind(StrEnum):
    SINCOS = "synthetic-sincos"
    CAR = "car-collision"
    MOUNTAIN_CAR = "mountain-car"
    EXTERNAL = "external"


@dataclass(frozen=True)
class EnvSpec:
    kind: EnvKind
    params: Mapping[str, Any] = field(default_factory=dict)
    domain: Domain | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", EnvKind(self.kind))
        if self.domain is None:
            object.__setattr__(self, "domain", default_domain(self.kind, self.params))

    def to_dict(self) -> dict:
        return {"kind": str(self.kind), "params": dict(self.params), **self.domain.to_dict()}


@dataclass(frozen=True)
class Evaluation:
    mu: dict[str, float]
    trajectory: Trajectory | None = None


def default_domain(kind: EnvKind, params: Mapping[str, Any]) -> Domain:
    match kind:
        case EnvKind.SINCOS:
            return Domain(*SINCOS_DOMAIN)
        case EnvKind.CAR:
            return Domain(*car_domain(params.get("horizon", CAR_HORIZON)))
        case EnvKind.MOUNTAIN_CAR:
            return Domain(*MOUNTAIN_CAR_DOMAIN)
    msg = "environment.lower and environment.upper are required for external simulators"
    raise ConfigError(msg)


def default_bindings(kind: EnvKind) -> dict[str, PredicateBinding]:
    """Predicates every built-in environment ships with."""
    match kind:
        case EnvKind.SINCOS:
            bindings = [
                PredicateBinding("mu1", "terminal", "sin", offset=0.65),
                PredicateBinding("mu2", "terminal", "cos", offset=0.65),
            ]
        case EnvKind.CAR:
            bindings = [PredicateBinding("phi", "min", "x", gain=-1.0, offset=5.0)]
        case EnvKind.MOUNTAIN_CAR:
            bindings = [
                PredicateBinding("mu1", "time_to_threshold", "goal_gap", threshold=0.0, limit=200.0),
                PredicateBinding("mu2", "min", "displacement", gain=-1 / 1.1, offset=1.0, absolute=True),
                PredicateBinding("mu3", "min", "v", gain=-1 / 0.05, offset=1.0, absolute=True),
            ]
        case _:
            bindings = []
    return {binding.name: binding for binding in bindings}


def _simulator(spec: EnvSpec) -> Callable[[np.ndarray], Trajectory]:
    params = dict(spec.params)
    match spec.kind:
        case EnvKind.SINCOS:
            return functools.partial(simulate_sincos, amplitude=params.get("amplitude", 1.0))
        case EnvKind.CAR:
            return functools.partial(
                simulate_car,
                k1=params.get("k1", CAR_GAINS[0]),
                k2=params.get("k2", CAR_GAINS[1]),
                dt=params.get("dt", 0.1),
                horizon=params.get("horizon", CAR_HORIZON),
                x_init=params.get("x_init", 0.0),
                v_init=params.get("v_init", 3.0),
                accel_limit=params.get("accel_limit", 3.0),
            )
        case EnvKind.MOUNTAIN_CAR:
            return functools.partial(
                simulate_mountain_car,
                domain=(spec.domain.lower, spec.domain.upper),
                max_steps=params.get("max_steps", 500),
            )
    raise ConfigError(spec.kind)


class Environment:
    """
    A system under test: maps an environment vector w to predicate values.

    Built-in and trajectory-mode external simulators go through the predicate
    bindings; mu-mode external simulators report predicate values themselves.
    """

    def __init__(self, spec: EnvSpec, bindings: Mapping[str, PredicateBinding] | None = None):
        self.spec = spec
        self.bindings = {**default_bindings(spec.kind), **(bindings or {})}
        self.external: ExternalSimulator | None = None
        self.required: tuple[str, ...] = ()
        if spec.kind == EnvKind.EXTERNAL:
            command = spec.params.get("command")
            if not command:
                msg = "environment.command is required for external simulators"
                raise ConfigError(msg)
            self.external = ExternalSimulator(
                [command] if isinstance(command, str) else command,
                dim=spec.domain.dim,
                mode=spec.params.get("mode"),
                timeout=spec.params.get("timeout", 60.0),
                cwd=spec.params.get("cwd"),
            )
            self._simulate = None
        else:
            self._simulate = _simulator(spec)

    @property
    def domain(self) -> Domain:
        return self.spec.domain

    @property
    def predicates(self) -> tuple[str, ...]:
        if self.external is not None and self.external.mode == ReplyMode.MU:
            return self.external.predicates
        return tuple(self.bindings)

    def require(self, names: Sequence[str]) -> None:
        """
        Fail unless every name is a predicate this environment can evaluate.

        An external simulator whose reply mode is not configured is checked
        again by open(), once its handshake has announced the mode.
        """
        self.required = tuple(names)
        if self.external is not None and self.external.mode != ReplyMode.TRAJECTORY:
            self.external.predicates = self.required
            return
        self._check_bindings(self.required)

    def _check_bindings(self, names: Sequence[str]) -> None:
        unbound = [name for name in names if name not in self.bindings]
        if unbound:
            msg = f"no binding for predicates {', '.join(unbound)} in environment {self.spec.kind}"
            raise ConfigError(msg)

    def open(self) -> Environment:
        if self.external is not None and self.external.process is None:
            self.external.start()
            if self.external.mode == ReplyMode.TRAJECTORY:
                try:
                    self._check_bindings(self.required)
                except ConfigError:
                    self.close()
                    raise
        return self

    def close(self) -> None:
        if self.external is not None:
            self.external.close()

    def __enter__(self) -> Environment:
        return self.open()

    def __exit__(self, *exc_info) -> None:
        self.close()

    def evaluate(self, w: Sequence[float], names: Sequence[str] | None = None) -> Evaluation:
        """Simulate w and evaluate the named predicates (all bound predicates by default)."""
        point = np.asarray(w, dtype=float).reshape(-1)
        if point.size != self.domain.dim:
            msg = f"expected {self.domain.dim} parameters, got {point.size}"
            raise SimulationError(msg)
        if self.external is not None:
            self.open()
            reply = self.external.simulate(point)
            if isinstance(reply, dict):
                wanted = names or tuple(reply)
                missing = [name for name in wanted if name not in reply]
                if missing:
                    msg = f"simulator did not report {', '.join(missing)}"
                    raise SimulationError(msg)
                return Evaluation(mu={name: reply[name] for name in wanted})
            trajectory = reply
        else:
            trajectory = self._simulate(point)
        wanted = names or tuple(self.bindings)
        mu = {name: eval_predicate(self._binding(name), trajectory) for name in wanted}
        return Evaluation(mu=mu, trajectory=trajectory)

    def _binding(self, name: str) -> PredicateBinding:
        try:
            return self.bindings[name]
        except KeyError:
            msg = f"no binding for predicate {name!r}"
            raise ConfigError(msg) from None


def build_environment(
    kind: EnvKind | str,
    params: Mapping[str, Any] | None = None,
    domain: Domain | None = None,
    bindings: Mapping[str, PredicateBinding] | None = None,
) -> Environment:
    spec = EnvSpec(EnvKind(kind), dict(params or {}), domain)
    logger.debug("Environment %s over a %d-dimensional domain", spec.kind, spec.domain.dim)
    return Environment(spec, bindings)
