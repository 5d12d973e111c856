import math

import numpy as np
import pytest

from active_testing.envs import CAR_GAINS
from active_testing.envs import MOUNTAIN_CAR_DOMAIN
from active_testing.envs import PredicateBinding
from active_testing.envs import build_environment
from active_testing.envs import calibrate_car_gains
from active_testing.envs import eval_predicate
from active_testing.envs import simulate_car
from active_testing.envs import simulate_mountain_car
from active_testing.envs import simulate_sincos
from active_testing.exceptions import ConfigError
from active_testing.exceptions import SimulationError
from active_testing.speclang import compile_spec
from active_testing.speclang import eval_tree

WIDE_MOUNTAIN_CAR = (
    (-0.6, -0.025, 0.4, 0.05, 0.0005),
    (-0.4, 0.025, 0.6, 0.75, 0.0025),
)


class TestSinCos:
    def test_channels(self):
        trajectory = simulate_sincos([1.0])
        assert trajectory["sin"][0] == math.sin(1.0)
        assert trajectory["cos"][0] == math.cos(1.0)

    def test_robustness_matches_closed_form(self):
        environment = build_environment("synthetic-sincos")
        tree = compile_spec("mu1 or mu2")
        for w in np.linspace(0.0, 10.0, 2001):
            mu = environment.evaluate([w]).mu
            phi = eval_tree(tree, [mu[name] for name in tree.predicates])
            assert phi == pytest.approx(max(math.sin(w) + 0.65, math.cos(w) + 0.65), abs=1e-12)

    def test_zero_amplitude_is_safe(self):
        environment = build_environment("synthetic-sincos", {"amplitude": 0.0})
        assert environment.evaluate([3.9]).mu == {"mu1": 0.65, "mu2": 0.65}

    def test_wrong_dimension(self):
        with pytest.raises(SimulationError):
            simulate_sincos([1.0, 2.0])


class TestCar:
    def test_nominal_run_is_near_critical(self):
        trajectory = simulate_car(np.full(100, 5.0))
        clearance = np.min(5.0 - trajectory["x"])
        assert np.max(trajectory["x"]) < 5.0
        assert 0 < clearance <= 0.1

    def test_zero_gains_coast(self):
        trajectory = simulate_car(np.full(100, 5.0), 0.0, 0.0)
        np.testing.assert_allclose(trajectory["x"], 0.3 * np.arange(101), atol=1e-9)
        assert trajectory["x"][10] == pytest.approx(3.0)
        assert trajectory.t[10] == pytest.approx(1.0)

    def test_clearance_matches_hand_loop(self):
        rng = np.random.default_rng(0)
        readings = rng.uniform(4.5, 5.5, size=100)
        environment = build_environment("car-collision")
        x, v, clearance = 0.0, 3.0, math.inf
        k1, k2 = CAR_GAINS
        for reading in readings:
            clearance = min(clearance, 5.0 - x)
            a = max(-3.0, min(3.0, k1 * (x - reading) + k2 * v))
            x, v = x + 0.1 * v, v + 0.1 * a
        clearance = min(clearance, 5.0 - x)
        assert environment.evaluate(readings).mu["phi"] == pytest.approx(clearance, abs=1e-12)

    def test_acceleration_is_clipped(self):
        rng = np.random.default_rng(1)
        trajectory = simulate_car(rng.uniform(4.5, 5.5, size=100), k1=-40.0, k2=-1.0)
        assert np.all(np.abs(trajectory["a"]) <= 3.0)
        assert np.all(np.abs(trajectory["v"]) <= 3.0 + 3.0 * 10.0)

    def test_deterministic(self):
        readings = np.random.default_rng(2).uniform(4.5, 5.5, size=100)
        assert simulate_car(readings) == simulate_car(readings)

    def test_wrong_dimension(self):
        with pytest.raises(SimulationError):
            simulate_car(np.full(99, 5.0))

    def test_calibration_reproduces_default_gains(self):
        k1, k2, clearance = calibrate_car_gains()
        assert (k1, k2) == CAR_GAINS
        assert 0 < clearance <= 0.1


class TestMountainCar:
    def test_standard_parameters_reach_the_goal(self):
        trajectory = simulate_mountain_car((-0.5, 0.0, 0.45, 0.07, 0.0015), domain=WIDE_MOUNTAIN_CAR)
        assert len(trajectory) < 501
        assert trajectory["goal_gap"][-1] >= 0

    def test_goal_time_margin_without_a_limit(self):
        binding = PredicateBinding("reach", "time_to_threshold", "goal_gap")
        trajectory = simulate_mountain_car((-0.5, 0.0, 0.45, 0.07, 0.0015), domain=WIDE_MOUNTAIN_CAR)
        assert trajectory.horizon == 500.0  # noqa: PLR2004
        t_goal = trajectory.t[-1]
        assert t_goal < 500  # noqa: PLR2004
        assert eval_predicate(binding, trajectory) == pytest.approx((500 - t_goal) / 500)
        assert eval_predicate(binding, trajectory) > 0

    def test_weak_motor_is_slower(self):
        strong = build_environment("mountain-car").evaluate((-0.5, 0.0, 0.6, 0.6, 0.0025))
        weak = build_environment("mountain-car").evaluate((-0.5, 0.0, 0.6, 0.6, 0.0005))
        assert weak.mu["mu1"] < strong.mu["mu1"]
        assert len(weak.trajectory) > len(strong.trajectory)

    def test_state_bounds(self):
        rng = np.random.default_rng(3)
        lower, upper = (np.array(bound) for bound in WIDE_MOUNTAIN_CAR)
        for _ in range(50):
            w = lower + rng.random(5) * (upper - lower)
            trajectory = simulate_mountain_car(w, domain=WIDE_MOUNTAIN_CAR)
            assert np.all(trajectory["x"] >= -1.2)
            assert np.all(trajectory["x"] <= 0.6)
            assert np.all(np.abs(trajectory["v"]) <= w[3] + 1e-15)

    def test_outside_the_box(self):
        with pytest.raises(SimulationError, match="v_max"):
            simulate_mountain_car((-0.5, 0.0, 0.45, 0.07, 0.0015))

    def test_default_domain(self):
        environment = build_environment("mountain-car")
        np.testing.assert_array_equal(environment.domain.lower, MOUNTAIN_CAR_DOMAIN[0])
        assert set(environment.predicates) == {"mu1", "mu2", "mu3"}


def test_unbound_predicate():
    environment = build_environment("car-collision")
    with pytest.raises(ConfigError, match="speed"):
        environment.require(["phi", "speed"])


def test_external_needs_a_domain():
    with pytest.raises(ConfigError, match="environment.lower"):
        build_environment("external", {"command": ["sim"]})
