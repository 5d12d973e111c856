from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field
from enum import StrEnum

from active_testing.envs import Trajectory


class Phase(StrEnum):
    INIT = "init"
    SEARCH = "search"
    RANDOM = "random"


@dataclass(frozen=True)
class HistoryRow:
    """
    One evaluated environment vector.

    iteration counts search steps from 1; initialization rows carry 0.
    information is the mutual information summed over all models after the
    row's measurement was added.
    """

    index: int
    phase: Phase
    iteration: int
    w: tuple[float, ...]
    mu: dict[str, float]
    phi: float
    beta_sqrt: float | None = None
    acquisition: float | None = None
    information: float | None = None

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "phase": str(self.phase),
            "iteration": self.iteration,
            "w": list(self.w),
            "mu": dict(self.mu),
            "phi": self.phi,
            "beta_sqrt": self.beta_sqrt,
            "acquisition": self.acquisition,
            "information": self.information,
        }


@dataclass(frozen=True)
class Certificate:
    verified: bool
    acquisition_min: float
    w: tuple[float, ...]
    beta_sqrt: float
    delta: float
    caveats: tuple[str, ...] = ("heuristic global optimum",)

    def to_dict(self) -> dict:
        return {
            "verified": self.verified,
            "acquisition_min": self.acquisition_min,
            "w": list(self.w),
            "beta_sqrt": self.beta_sqrt,
            "delta": self.delta,
            "caveats": list(self.caveats),
        }


@dataclass(frozen=True)
class Diagnostics:
    c1: float
    beta_sqrt: tuple[float, ...]
    information: tuple[float, ...]
    regret_bound: tuple[float, ...]
    epsilon: float | None = None
    n_star: int | None = None
    epsilon_verified: bool = False
    caveats: tuple[str, ...] = ("realized information used in place of its worst case",)

    def to_dict(self) -> dict:
        return {
            "c1": self.c1,
            "beta_sqrt": list(self.beta_sqrt),
            "information": list(self.information),
            "regret_bound": list(self.regret_bound),
            "epsilon": self.epsilon,
            "n_star": self.n_star,
            "epsilon_verified": self.epsilon_verified,
            "caveats": list(self.caveats),
        }


@dataclass
class RunResult:
    method: str
    seed: int
    predicates: tuple[str, ...]
    history: list[HistoryRow] = field(default_factory=list)
    worst_trajectory: Trajectory | None = None
    certificate: Certificate | None = None
    diagnostics: Diagnostics | None = None
    stopped_early: bool = False
    convergence_iteration: int | None = None

    @property
    def worst_index(self) -> int:
        """Index of the first row attaining the minimum phi."""
        if not self.history:
            msg = "the run has no evaluations"
            raise ValueError(msg)
        return min(range(len(self.history)), key=lambda i: self.history[i].phi)

    @property
    def worst(self) -> HistoryRow:
        return self.history[self.worst_index]

    @property
    def worst_phi(self) -> float:
        return self.worst.phi

    @property
    def counterexample_count(self) -> int:
        return sum(1 for row in self.history if row.phi <= 0)

    @property
    def falsified(self) -> bool:
        return self.counterexample_count > 0

    @property
    def verified(self) -> bool:
        return self.certificate is not None and self.certificate.verified

    @property
    def search_rows(self) -> list[HistoryRow]:
        return [row for row in self.history if row.phase != Phase.INIT]
