"""Loading TOML run configurations into engine objects."""

from __future__ import annotations

import logging
import math
import tomllib
from collections.abc import Mapping
from dataclasses import dataclass
from dataclasses import field
from dataclasses import replace
from pathlib import Path

from django.conf import settings

from active_testing.acquisition import BetaMode
from active_testing.acquisition import BetaSchedule
from active_testing.acquisition import Domain
from active_testing.engine import KernelSettings
from active_testing.engine import OptimizerSettings
from active_testing.engine import RunConfig
from active_testing.envs import EnvKind
from active_testing.envs import EnvSpec
from active_testing.envs import Environment
from active_testing.envs import PredicateBinding
from active_testing.exceptions import ConfigError
from active_testing.speclang import ParseTree
from active_testing.speclang import compile_spec

from .forms import BenchForm
from .forms import BetaForm
from .forms import EnvironmentForm
from .forms import GpForm
from .forms import KernelForm
from .forms import OptimizerForm
from .forms import OutputForm
from .forms import PredicateForm
from .forms import RunForm

logger = logging.getLogger(__name__)

SECTIONS = {"specification", "environment", "predicates", "gp", "beta", "optimizer", "run", "output", "bench"}


@dataclass(frozen=True)
class BenchSettings:
    repeats: int = 1
    methods: tuple[str, ...] = ()


@dataclass(frozen=True)
class LoadedConfig:
    specification: str
    env_spec: EnvSpec
    bindings: Mapping[str, PredicateBinding]
    run: RunConfig
    report: Path | None = None
    output_dir: Path | None = None
    bench: BenchSettings = field(default_factory=BenchSettings)
    source: Path | None = None

    @property
    def tree(self) -> ParseTree:
        return compile_spec(self.specification)

    @property
    def name(self) -> str:
        return self.source.stem if self.source else "run"

    def environment(self) -> Environment:
        """A fresh environment; external simulators start on first use."""
        return Environment(self.env_spec, self.bindings)

    def run_config(
        self,
        *,
        budget: int | None = None,
        seed: int | None = None,
        method: str | None = None,
        delta: float | None = None,
    ) -> RunConfig:
        """The configured run with command-line overrides applied."""
        config = self.run.with_overrides(budget=budget, seed=seed)
        if method is not None:
            config = config.with_method(method)
        if delta is not None:
            config = config.with_overrides(delta=delta, beta=replace(config.beta, delta=delta))
        return config


def load_config(path: str | Path) -> LoadedConfig:
    path = Path(path)
    try:
        with path.open("rb") as f:
            data = tomllib.load(f)
    except FileNotFoundError:
        msg = f"configuration file {path} does not exist"
        raise ConfigError(msg) from None
    except tomllib.TOMLDecodeError as exc:
        msg = f"{path}: {exc}"
        raise ConfigError(msg) from exc
    logger.debug("Loaded configuration %s", path)
    return load_config_data(data, source=path)


def load_config_data(data: Mapping, source: Path | None = None) -> LoadedConfig:
    """Validate a parsed configuration and build the objects it describes."""
    unknown = sorted(set(data) - SECTIONS)
    if unknown:
        msg = f"unknown configuration sections: {', '.join(unknown)}"
        raise ConfigError(msg)
    specification = data.get("specification")
    if not isinstance(specification, str) or not specification.strip():
        msg = "specification: a non-empty specification string is required"
        raise ConfigError(msg)
    compile_spec(specification)

    output = OutputForm.validate(data.get("output"))
    run = _run_config(data)
    bench = BenchForm.validate(data.get("bench"))
    return LoadedConfig(
        specification=specification,
        env_spec=_env_spec(data.get("environment")),
        bindings=_bindings(data.get("predicates")),
        run=run,
        report=Path(output["report"]) if output.get("report") else None,
        output_dir=Path(output["dir"]) if output.get("dir") else None,
        bench=BenchSettings(
            repeats=bench.get("repeats", 1),
            methods=bench.get("methods") or (run.label,),
        ),
        source=source,
    )


def _env_spec(section) -> EnvSpec:
    values = EnvironmentForm.validate(section)
    kind = EnvKind(values.pop("kind"))
    domain = None
    if "lower" in values:
        domain = Domain(values.pop("lower"), values.pop("upper"))
    if kind == EnvKind.EXTERNAL:
        values["command"] = list(values["command"])
        values.setdefault("timeout", settings.ACTIVE_TESTING_EXTERNAL_TIMEOUT)
    return EnvSpec(kind, values, domain)


def _bindings(section) -> dict[str, PredicateBinding]:
    if section is None:
        return {}
    if not isinstance(section, Mapping):
        msg = "predicates: expected a table of predicate tables"
        raise ConfigError(msg)
    return {
        name: PredicateBinding(name=name, **PredicateForm.validate(table, f"predicates.{name}"))
        for name, table in section.items()
    }


def _kernel_settings(values: Mapping) -> KernelSettings:
    return KernelSettings(
        signal_variance=values.get("signal_variance", settings.ACTIVE_TESTING_SIGNAL_VARIANCE),
        lengthscales=values.get("lengthscales"),
    )


def _run_config(data: Mapping) -> RunConfig:
    gp = GpForm.validate(data.get("gp"))
    overrides = gp.pop("overrides", None) or {}
    if not isinstance(overrides, Mapping):
        msg = "gp.overrides: expected a table of predicate tables"
        raise ConfigError(msg)
    beta = BetaForm.validate(data.get("beta"))
    optimizer = OptimizerForm.validate(data.get("optimizer"))
    run = RunForm.validate(data.get("run"))

    delta = beta.get("delta", 0.05)
    noise_variance = gp.get("noise_variance", settings.ACTIVE_TESTING_NOISE_VARIANCE)
    if beta.get("mode") == BetaMode.THEORETICAL:
        # sigma is the noise standard deviation the GPs are fitted with
        sigma = beta.get("sigma", math.sqrt(noise_variance))
        schedule = BetaSchedule.theoretical(beta["bounds"], delta, sigma)
    else:
        schedule = BetaSchedule.fixed(beta.get("value", settings.ACTIVE_TESTING_BETA_SQRT))

    config = RunConfig(
        budget=run["budget"],
        seed=run.get("seed", 0),
        beta=schedule,
        optimizer=OptimizerSettings(
            restarts=optimizer.get("restarts", settings.ACTIVE_TESTING_RESTARTS),
            local_budget=optimizer.get("local_budget", settings.ACTIVE_TESTING_LOCAL_BUDGET),
            simplex_scale=optimizer.get("simplex_scale", settings.ACTIVE_TESTING_SIMPLEX_SCALE),
        ),
        init_samples=run.get("init_samples", settings.ACTIVE_TESTING_INIT_SAMPLES),
        embedding_dim=optimizer.get("embedding_dim"),
        noise_variance=noise_variance,
        kernel=_kernel_settings(gp),
        overrides={
            name: _kernel_settings(KernelForm.validate(table, f"gp.overrides.{name}"))
            for name, table in overrides.items()
        },
        delta=delta,
        verify=run.get("verify", False),
        epsilon=run.get("epsilon"),
        target=run.get("target"),
        tolerance=run.get("tolerance", 0.1),
    )
    if run.get("method"):
        config = config.with_method(run["method"])
    return config
