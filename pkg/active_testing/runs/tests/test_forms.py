import pytest
from django.core.exceptions import ValidationError

from active_testing.exceptions import ConfigError
from active_testing.runs.forms import BetaForm
from active_testing.runs.forms import EnvironmentForm
from active_testing.runs.forms import FloatListField
from active_testing.runs.forms import GpForm
from active_testing.runs.forms import KernelForm
from active_testing.runs.forms import PredicateForm
from active_testing.runs.forms import RunForm
from active_testing.runs.forms import StringListField


class TestFloatListField:
    def test_numbers(self):
        assert FloatListField().clean([1, 2.5]) == (1.0, 2.5)

    def test_scalar_becomes_a_list(self):
        assert FloatListField().clean(3) == (3.0,)

    @pytest.mark.parametrize("value", ["1, 2", [1, "2"], [True], [float("inf")]])
    def test_rejects(self, value):
        with pytest.raises(ValidationError, match="numbers"):
            FloatListField().clean(value)


def test_string_list_field():
    assert StringListField().clean("sim") == ("sim",)
    assert StringListField().clean(["python", "sim.py"]) == ("python", "sim.py")


class TestEnvironmentForm:
    def test_only_provided_keys_are_returned(self):
        assert EnvironmentForm.validate({"kind": "synthetic-sincos", "amplitude": 0.5}) == {
            "kind": "synthetic-sincos",
            "amplitude": 0.5,
        }

    def test_unknown_key(self):
        with pytest.raises(ConfigError, match="environment: unknown key 'colour'"):
            EnvironmentForm.validate({"kind": "car-collision", "colour": "red"})

    def test_parameter_of_another_kind(self):
        with pytest.raises(ConfigError, match="environment.amplitude: not a parameter of car-collision"):
            EnvironmentForm.validate({"kind": "car-collision", "amplitude": 1.0})

    def test_unknown_kind(self):
        with pytest.raises(ConfigError, match="environment.kind"):
            EnvironmentForm.validate({"kind": "pendulum"})

    def test_missing_kind(self):
        with pytest.raises(ConfigError, match="environment.kind"):
            EnvironmentForm.validate({})

    def test_bounds_come_in_pairs(self):
        with pytest.raises(ConfigError, match="lower and upper must be given together"):
            EnvironmentForm.validate({"kind": "synthetic-sincos", "lower": [0.0]})

    def test_external_needs_a_command(self):
        with pytest.raises(ConfigError, match="environment.command"):
            EnvironmentForm.validate({"kind": "external", "lower": [0.0], "upper": [1.0]})

    def test_external(self):
        values = EnvironmentForm.validate(
            {"kind": "external", "command": ["sim"], "mode": "mu", "lower": [0], "upper": [1]},
        )
        assert values["command"] == ("sim",)
        assert values["mode"] == "mu"

    def test_section_must_be_a_table(self):
        with pytest.raises(ConfigError, match="environment: expected a table"):
            EnvironmentForm.validate("car")


class TestPredicateForm:
    def test_binding(self):
        values = PredicateForm.validate(
            {"functional": "min", "channel": "x", "gain": -1, "offset": 5, "absolute": True},
            "predicates.phi",
        )
        assert values == {"functional": "min", "channel": "x", "gain": -1.0, "offset": 5.0, "absolute": True}

    def test_unknown_functional_names_the_predicate(self):
        with pytest.raises(ConfigError, match="predicates.phi.functional"):
            PredicateForm.validate({"functional": "mean", "channel": "x"}, "predicates.phi")

    def test_every_problem_is_reported(self):
        with pytest.raises(ConfigError) as excinfo:
            PredicateForm.validate({"gain": "big"}, "predicates.mu1")
        message = str(excinfo.value)
        assert "predicates.mu1.functional" in message
        assert "predicates.mu1.channel" in message
        assert "predicates.mu1.gain" in message


def test_lengthscales_must_be_positive():
    with pytest.raises(ConfigError, match="gp.lengthscales"):
        GpForm.validate({"lengthscales": [1.0, 0.0]})
    with pytest.raises(ConfigError, match="gp.overrides.mu1.lengthscales"):
        KernelForm.validate({"lengthscales": [-1.0]}, "gp.overrides.mu1")


def test_theoretical_beta_needs_bounds():
    with pytest.raises(ConfigError, match="beta.bounds"):
        BetaForm.validate({"mode": "theoretical"})


class TestRunForm:
    def test_budget_is_required(self):
        with pytest.raises(ConfigError, match="run.budget"):
            RunForm.validate({"seed": 1})

    def test_seed_is_64_bit(self):
        assert RunForm.validate({"budget": 1, "seed": 2**64 - 1})["seed"] == 2**64 - 1
        with pytest.raises(ConfigError, match="run.seed"):
            RunForm.validate({"budget": 1, "seed": -1})

    def test_integral_float_budget(self):
        assert RunForm.validate({"budget": 5.0})["budget"] == 5  # noqa: PLR2004
