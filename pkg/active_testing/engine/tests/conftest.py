import pytest

from active_testing.acquisition import BetaSchedule
from active_testing.engine import OptimizerSettings
from active_testing.engine import RunConfig
from active_testing.envs import build_environment


@pytest.fixture
def sincos():
    return build_environment("synthetic-sincos")


@pytest.fixture
def make_config():
    def make(**overrides) -> RunConfig:
        settings = {
            "budget": 5,
            "seed": 0,
            "beta": BetaSchedule.fixed(3.0),
            "optimizer": OptimizerSettings(restarts=20, local_budget=60),
        }
        settings.update(overrides)
        return RunConfig(**settings)

    return make
