"""
Validation of run configuration files.

Every TOML section is checked by its own form. Forms are strict: keys a
section does not know are errors, and every error message names the offending
``section.field``.
"""

from __future__ import annotations

import math
from collections.abc import Mapping

from django import forms
from django.core.exceptions import NON_FIELD_ERRORS

from active_testing.acquisition import BetaMode
from active_testing.envs import FUNCTIONALS
from active_testing.envs import EnvKind
from active_testing.envs import ReplyMode
from active_testing.exceptions import ConfigError


class FloatListField(forms.Field):
    """A TOML array of numbers."""

    def to_python(self, value):
        if value in self.empty_values:
            return None
        if isinstance(value, int | float) and not isinstance(value, bool):
            value = [value]
        if not isinstance(value, list | tuple):
            raise forms.ValidationError("expected an array of numbers", code="invalid")
        if any(isinstance(v, bool) or not isinstance(v, int | float) for v in value):
            raise forms.ValidationError("expected an array of numbers", code="invalid")
        if not all(math.isfinite(v) for v in value):
            raise forms.ValidationError("numbers must be finite", code="invalid")
        return tuple(float(v) for v in value)


class StringListField(forms.Field):
    """A string or a TOML array of strings."""

    def to_python(self, value):
        if value in self.empty_values:
            return None
        if isinstance(value, str):
            return (value,)
        if not isinstance(value, list | tuple) or not all(isinstance(v, str) and v for v in value):
            raise forms.ValidationError("expected a string or an array of strings", code="invalid")
        return tuple(value)


class StrictForm(forms.Form):
    """Form over one configuration section that rejects unknown keys."""

    section = ""

    def __init__(self, data: Mapping, section: str | None = None):
        super().__init__(data=dict(data))
        if section is not None:
            self.section = section

    def clean(self):
        cleaned_data = super().clean()
        for key in sorted(set(self.data) - set(self.fields)):
            self.add_error(None, f"unknown key {key!r}")
        return cleaned_data

    @property
    def provided(self) -> dict:
        """Cleaned values of the keys present in the section."""
        return {key: value for key, value in self.cleaned_data.items() if key in self.data}

    def messages(self) -> list[str]:
        messages = []
        for field, errors in self.errors.items():
            where = self.section if field == NON_FIELD_ERRORS else f"{self.section}.{field}"
            messages.extend(f"{where}: {error}" for error in errors)
        return messages

    @classmethod
    def validate(cls, data: Mapping | None, section: str | None = None) -> dict:
        """Cleaned values of the provided keys; ConfigError listing every problem otherwise."""
        if data is None:
            data = {}
        if not isinstance(data, Mapping):
            msg = f"{section or cls.section}: expected a table"
            raise ConfigError(msg)
        form = cls(data, section)
        if not form.is_valid():
            raise ConfigError("; ".join(form.messages()))
        return form.provided


# Keys each environment kind accepts besides kind, lower and upper.
KIND_PARAMETERS = {
    EnvKind.SINCOS: {"amplitude"},
    EnvKind.CAR: {"k1", "k2", "dt", "horizon", "x_init", "v_init", "accel_limit"},
    EnvKind.MOUNTAIN_CAR: {"max_steps"},
    EnvKind.EXTERNAL: {"command", "mode", "timeout", "cwd"},
}


class EnvironmentForm(StrictForm):
    section = "environment"

    kind = forms.ChoiceField(choices=[(kind.value, kind.value) for kind in EnvKind])
    lower = FloatListField(required=False)
    upper = FloatListField(required=False)
    amplitude = forms.FloatField(required=False)
    k1 = forms.FloatField(required=False)
    k2 = forms.FloatField(required=False)
    dt = forms.FloatField(required=False, min_value=1e-6)
    horizon = forms.IntegerField(required=False, min_value=1)
    x_init = forms.FloatField(required=False)
    v_init = forms.FloatField(required=False)
    accel_limit = forms.FloatField(required=False, min_value=0)
    max_steps = forms.IntegerField(required=False, min_value=1)
    command = StringListField(required=False)
    mode = forms.ChoiceField(required=False, choices=[(mode.value, mode.value) for mode in ReplyMode])
    timeout = forms.FloatField(required=False, min_value=0.001)
    cwd = forms.CharField(required=False)

    def clean(self):
        cleaned_data = super().clean()
        kind = cleaned_data.get("kind")
        if kind is None:
            return cleaned_data
        allowed = KIND_PARAMETERS[EnvKind(kind)] | {"kind", "lower", "upper"}
        for key in sorted(set(self.data) & set(self.fields) - allowed):
            self.add_error(key, f"not a parameter of {kind} environments")
        if ("lower" in self.data) != ("upper" in self.data):
            self.add_error(None, "lower and upper must be given together")
        if kind == EnvKind.EXTERNAL and not cleaned_data.get("command"):
            self.add_error("command", "required for external simulators")
        return cleaned_data


class PredicateForm(StrictForm):
    functional = forms.ChoiceField(choices=[(name, name) for name in sorted(FUNCTIONALS)])
    channel = forms.CharField()
    gain = forms.FloatField(required=False)
    offset = forms.FloatField(required=False)
    absolute = forms.BooleanField(required=False)
    threshold = forms.FloatField(required=False)
    limit = forms.FloatField(required=False, min_value=1e-12)


class KernelForm(StrictForm):
    signal_variance = forms.FloatField(required=False, min_value=1e-12)
    lengthscales = FloatListField(required=False)

    def clean_lengthscales(self):
        lengthscales = self.cleaned_data["lengthscales"]
        if lengthscales is not None and any(ell <= 0 for ell in lengthscales):
            raise forms.ValidationError("lengthscales must be positive")
        return lengthscales


class GpForm(KernelForm):
    section = "gp"

    noise_variance = forms.FloatField(required=False, min_value=1e-12)
    overrides = forms.Field(required=False)


class BetaForm(StrictForm):
    section = "beta"

    mode = forms.ChoiceField(required=False, choices=[(mode.value, mode.value) for mode in BetaMode])
    value = forms.FloatField(required=False, min_value=1e-12)
    bounds = FloatListField(required=False)
    delta = forms.FloatField(required=False)
    sigma = forms.FloatField(required=False, min_value=1e-12)

    def clean(self):
        cleaned_data = super().clean()
        if cleaned_data.get("mode") == BetaMode.THEORETICAL and not cleaned_data.get("bounds"):
            self.add_error("bounds", "theoretical mode needs one RKHS bound per predicate")
        return cleaned_data


class OptimizerForm(StrictForm):
    section = "optimizer"

    restarts = forms.IntegerField(required=False, min_value=1)
    local_budget = forms.IntegerField(required=False, min_value=1)
    simplex_scale = forms.FloatField(required=False, min_value=1e-9, max_value=1)
    embedding_dim = forms.IntegerField(required=False, min_value=1)


class RunForm(StrictForm):
    section = "run"

    method = forms.CharField(required=False)
    budget = forms.IntegerField(min_value=1)
    seed = forms.IntegerField(required=False, min_value=0, max_value=2**64 - 1)
    init_samples = forms.IntegerField(required=False, min_value=0)
    verify = forms.BooleanField(required=False)
    epsilon = forms.FloatField(required=False)
    target = FloatListField(required=False)
    tolerance = forms.FloatField(required=False, min_value=0)


class OutputForm(StrictForm):
    section = "output"

    report = forms.CharField(required=False)
    dir = forms.CharField(required=False)


class BenchForm(StrictForm):
    section = "bench"

    repeats = forms.IntegerField(required=False, min_value=1)
    methods = StringListField(required=False)
