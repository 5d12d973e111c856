"""Confidence-interval scaling for the lower confidence bound."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum

from active_testing.exceptions import AcquisitionError
from active_testing.exceptions import ConfigError
from active_testing.gp import GpModel


class BetaMode(StrEnum):
    FIXED = "fixed"
    THEORETICAL = "theoretical"


@dataclass(frozen=True)
class BetaSchedule:
    mode: BetaMode
    value: float = 3.0
    bounds: tuple[float, ...] = ()
    delta: float = 0.05
    sigma: float = 0.01

    def __post_init__(self):
        object.__setattr__(self, "mode", BetaMode(self.mode))
        object.__setattr__(self, "bounds", tuple(float(b) for b in self.bounds))
        if self.mode == BetaMode.FIXED:
            if not (math.isfinite(self.value) and self.value > 0):
                msg = f"beta.value must be positive, got {self.value!r}"
                raise ConfigError(msg)
            return
        if not 0 < self.delta < 1:
            msg = f"beta.delta must lie in (0, 1), got {self.delta!r}"
            raise ConfigError(msg)
        if not self.sigma > 0:
            msg = f"beta.sigma must be positive, got {self.sigma!r}"
            raise ConfigError(msg)
        if not self.bounds or any(b <= 0 for b in self.bounds):
            msg = "beta.bounds needs one positive RKHS bound per predicate"
            raise ConfigError(msg)

    @classmethod
    def fixed(cls, value: float) -> BetaSchedule:
        return cls(BetaMode.FIXED, value=value)

    @classmethod
    def theoretical(cls, bounds: Sequence[float], delta: float, sigma: float) -> BetaSchedule:
        return cls(BetaMode.THEORETICAL, bounds=tuple(bounds), delta=delta, sigma=sigma)

    def to_dict(self) -> dict:
        if self.mode == BetaMode.FIXED:
            return {"mode": str(self.mode), "value": self.value}
        return {
            "mode": str(self.mode),
            "bounds": list(self.bounds),
            "delta": self.delta,
            "sigma": self.sigma,
        }


def beta_sqrt_at(schedule: BetaSchedule, models: Sequence[GpModel], n: int) -> float:
    """
    Square root of beta for iteration n (1-based).

    In theoretical mode:

        sum_i B_i + 4 sigma sqrt(1 + ln(1 / delta) + sum_i I_i)

    where I_i is the mutual information accumulated by model i so far, that is
    over the first n - 1 measurements when called before the n-th one.
    """
    if n < 1:
        msg = f"iterations are numbered from 1, got {n}"
        raise AcquisitionError(msg)
    if schedule.mode == BetaMode.FIXED:
        return schedule.value
    if len(schedule.bounds) != len(models):
        msg = f"{len(schedule.bounds)} RKHS bounds for {len(models)} predicates"
        raise AcquisitionError(msg)
    information = sum(model.mutual_information() for model in models)
    return sum(schedule.bounds) + 4 * schedule.sigma * math.sqrt(
        1 + math.log(1 / schedule.delta) + information,
    )
