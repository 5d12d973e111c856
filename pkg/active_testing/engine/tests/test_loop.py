import numpy as np
import pytest

from active_testing.engine import Method
from active_testing.engine import Phase
from active_testing.engine import RandomStreams
from active_testing.engine import RunConfig
from active_testing.engine import active_test
from active_testing.engine import run_baseline
from active_testing.engine import run_method
from active_testing.envs import build_environment
from active_testing.exceptions import ConfigError
from active_testing.exceptions import EngineError
from active_testing.exceptions import SimulationError
from active_testing.speclang import compile_spec
from active_testing.speclang import eval_tree

SINCOS_SPEC = "mu1 or mu2"


def test_history_covers_initialisation_and_budget(sincos, make_config):
    result = active_test(SINCOS_SPEC, sincos, make_config(budget=1))
    assert len(result.history) == 1 + 5
    assert [row.phase for row in result.history] == [Phase.INIT] * 5 + [Phase.SEARCH]
    assert result.worst_phi == min(row.phi for row in result.history)


def test_phi_matches_stored_predicate_values(sincos, make_config):
    result = active_test(SINCOS_SPEC, sincos, make_config(budget=4))
    tree = compile_spec(SINCOS_SPEC)
    for row in result.history:
        assert row.phi == eval_tree(tree, [row.mu[name] for name in tree.predicates])
        assert row.phi == pytest.approx(max(np.sin(row.w[0]), np.cos(row.w[0])) + 0.65, abs=1e-12)


def test_counterexample_count(sincos, make_config):
    result = active_test(SINCOS_SPEC, sincos, make_config(budget=4))
    assert result.counterexample_count == sum(row.phi <= 0 for row in result.history)


def test_same_seed_same_history(sincos, make_config):
    first = active_test(SINCOS_SPEC, sincos, make_config(seed=42))
    second = active_test(SINCOS_SPEC, sincos, make_config(seed=42))
    assert [row.to_dict() for row in first.history] == [row.to_dict() for row in second.history]


def test_different_seed_different_history(sincos, make_config):
    first = active_test(SINCOS_SPEC, sincos, make_config(seed=1))
    second = active_test(SINCOS_SPEC, sincos, make_config(seed=2))
    assert first.history[0].w != second.history[0].w


def test_search_rows_record_acquisition(sincos, make_config):
    result = active_test(SINCOS_SPEC, sincos, make_config(budget=3))
    for row in result.search_rows:
        assert row.beta_sqrt == 3.0
        assert row.acquisition is not None
    assert all(row.beta_sqrt is None for row in result.history[:5])
    assert result.history[-1].information > result.history[0].information


def test_single_predicate_is_plain_gp_lcb(sincos, make_config):
    multi = run_method("mu1", sincos, make_config(budget=4))
    single = run_method("mu1", sincos, make_config(budget=4, method=Method.SINGLE_GP))
    assert [row.w for row in multi.history] == [row.w for row in single.history]
    assert [row.phi for row in multi.history] == [row.phi for row in single.history]


def test_final_certificate_is_reported(sincos, make_config):
    result = active_test(SINCOS_SPEC, sincos, make_config(budget=2))
    assert result.certificate is not None
    assert "heuristic global optimum" in result.certificate.caveats
    assert not result.verified


def test_diagnostics_follow_search_rows(sincos, make_config):
    result = active_test(SINCOS_SPEC, sincos, make_config(budget=3, noise_variance=0.01))
    assert result.diagnostics.c1 == pytest.approx(8 / np.log(101))
    assert len(result.diagnostics.regret_bound) == 3


def test_convergence_iteration_with_target(sincos, make_config):
    result = active_test(SINCOS_SPEC, sincos, make_config(budget=3, target=(3.927,), tolerance=10.0))
    assert result.convergence_iteration == 1


def test_only_multi_gp_runs_through_active_test(sincos, make_config):
    with pytest.raises(ConfigError):
        active_test(SINCOS_SPEC, sincos, make_config(method=Method.RANDOM))


def test_unbound_predicate(sincos, make_config):
    with pytest.raises(ConfigError, match="speed"):
        active_test("mu1 and speed", sincos, make_config())


def test_simulator_failure_names_the_iteration(sincos, make_config, monkeypatch, caplog):
    evaluate = sincos.evaluate
    calls = []

    def flaky(w, names=None):
        calls.append(w)
        if len(calls) == 7:  # noqa: PLR2004
            msg = "solver diverged"
            raise SimulationError(msg)
        return evaluate(w, names)

    monkeypatch.setattr(sincos, "evaluate", flaky)
    with pytest.raises(EngineError, match="iteration 2: solver diverged") as excinfo:
        active_test(SINCOS_SPEC, sincos, make_config(budget=3))
    assert excinfo.value.iteration == 2
    assert "Run failed at iteration 2" in caplog.text


class TestEmbedding:
    def test_embedded_car_run(self, make_config):
        car = build_environment("car-collision")
        config = make_config(budget=2, embedding_dim=3).with_method("multi-gp-embedded")
        result = active_test("phi", car, config)
        assert result.method == "multi-gp-embedded"
        assert len(result.history) == 2 + 5
        for row in result.history:
            assert len(row.w) == 100
            assert car.domain.contains(row.w)
        assert "embedded subspace only" in result.certificate.caveats

    def test_embedding_needs_a_dimension(self, make_config):
        with pytest.raises(ConfigError):
            make_config().with_method("multi-gp-embedded")


class TestVerifyMode:
    def test_constant_safe_system_is_verified(self, make_config):
        safe = build_environment("synthetic-sincos", {"amplitude": 0.0})
        result = active_test(SINCOS_SPEC, safe, make_config(budget=40, verify=True))
        assert result.verified
        assert result.stopped_early
        assert result.certificate.acquisition_min > 0
        assert not result.falsified

    def test_falsifiable_system_is_never_verified(self, sincos, make_config):
        result = active_test(SINCOS_SPEC, sincos, make_config(budget=10, verify=True))
        assert not result.verified
        if result.stopped_early:
            assert result.history[-1].phi <= 0


class TestRandomBaseline:
    def test_draws_budget_points(self, sincos, make_config):
        result = run_baseline(SINCOS_SPEC, sincos, make_config(budget=25, method=Method.RANDOM))
        assert len(result.history) == 25
        assert {row.phase for row in result.history} == {Phase.RANDOM}
        assert result.certificate is None
        assert result.diagnostics is None

    def test_uses_its_own_stream(self, sincos, make_config):
        result = run_baseline(SINCOS_SPEC, sincos, make_config(budget=3, seed=9, method=Method.RANDOM))
        expected = sincos.domain.sample(RandomStreams(9)["random-baseline"], 3)
        np.testing.assert_array_equal([row.w for row in result.history], expected)

    def test_zero_budget_is_rejected(self):
        with pytest.raises(ConfigError, match="budget"):
            RunConfig(budget=0, method=Method.RANDOM)

    def test_multi_gp_is_not_a_baseline(self, sincos, make_config):
        with pytest.raises(ConfigError):
            run_baseline(SINCOS_SPEC, sincos, make_config())


def test_method_labels():
    config = RunConfig(budget=1, embedding_dim=2)
    assert config.with_method("single-gp-embedded").label == "single-gp-embedded"
    assert config.with_method("random").method == Method.RANDOM
    with pytest.raises(ConfigError, match="unknown method"):
        config.with_method("annealing")
    with pytest.raises(ConfigError):
        config.with_method("random-embedded")
