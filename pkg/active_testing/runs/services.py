"""Running configured methods and recording their outcomes."""

from __future__ import annotations

import logging
import statistics
import time
from collections.abc import Iterable
from collections.abc import Mapping
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import tablib
from django.conf import settings

from active_testing.engine import RunConfig
from active_testing.engine import build_report
from active_testing.engine import run_method
from active_testing.engine import write_report

from .configfile import LoadedConfig
from .models import BenchSession
from .models import FalsificationRun

logger = logging.getLogger(__name__)

SUMMARY_HEADERS = (
    "method",
    "runs",
    "counterexamples_mean",
    "counterexamples_std",
    "worst_phi_mean",
    "worst_phi_std",
    "falsified_runs",
    "verified_runs",
    "convergence_median",
    "not_converged",
    "wall_time_mean",
)


@dataclass(frozen=True)
class Outcome:
    report: dict
    wall_time: float


def execute(loaded: LoadedConfig, config: RunConfig) -> Outcome:
    """Run config.method on the configured environment and build its report."""
    environment = loaded.environment()
    started = time.perf_counter()
    result = run_method(loaded.specification, environment, config)
    wall_time = time.perf_counter() - started
    report = build_report(result, config, environment, loaded.specification)
    logger.info(
        "%s seed %d: worst phi %.6g, %d counterexamples, %.2f s",
        config.label,
        config.seed,
        result.worst_phi,
        result.counterexample_count,
        wall_time,
    )
    return Outcome(report=report, wall_time=wall_time)


def default_report_path(loaded: LoadedConfig, config: RunConfig) -> Path:
    directory = loaded.output_dir or Path(settings.ACTIVE_TESTING_REPORT_DIR)
    return directory / f"{loaded.name}-{config.label}-seed{config.seed}.json"


def record(
    outcome: Outcome,
    path: Path,
    *,
    mode: str,
    session: BenchSession | None = None,
) -> FalsificationRun:
    """Write the report to path and store a run record pointing at it."""
    write_report(outcome.report, path)
    return FalsificationRun.from_report(
        outcome.report,
        mode=mode,
        wall_time=outcome.wall_time,
        report_path=str(path),
        session=session,
    )


def summary_line(outcome: Outcome, path: Path | None = None) -> str:
    report = outcome.report
    worst = report["worst"]
    w = ", ".join(f"{v:.4g}" for v in worst["w"][:5]) + (", ..." if len(worst["w"]) > 5 else "")  # noqa: PLR2004
    line = (
        f"{report['method']} seed {report['seed']}: worst phi {worst['phi']:.6g} at w=[{w}], "
        f"{report['counterexample_count']} counterexamples in {len(report['history'])} evaluations, "
        f"{outcome.wall_time:.2f} s"
    )
    return f"{line} -> {path}" if path else line


def summarize(rows: Iterable[Mapping]) -> list[dict]:
    """
    Per-method aggregates of raw run rows, in order of first appearance.

    Rows need method, counterexample_count, worst_phi, falsified, verified,
    convergence_iteration and wall_time. Standard deviations are population
    deviations, so a single repeat reports 0.
    """
    grouped: dict[str, list[Mapping]] = {}
    for row in rows:
        grouped.setdefault(row["method"], []).append(row)
    summary = []
    for method, runs in grouped.items():
        counts = np.array([run["counterexample_count"] for run in runs], dtype=float)
        worst = np.array([run["worst_phi"] for run in runs], dtype=float)
        converged = [run["convergence_iteration"] for run in runs if run["convergence_iteration"] is not None]
        summary.append(
            {
                "method": method,
                "runs": len(runs),
                "counterexamples_mean": float(counts.mean()),
                "counterexamples_std": float(counts.std()),
                "worst_phi_mean": float(worst.mean()),
                "worst_phi_std": float(worst.std()),
                "falsified_runs": sum(1 for run in runs if run["falsified"]),
                "verified_runs": sum(1 for run in runs if run["verified"]),
                "convergence_median": float(statistics.median(converged)) if converged else None,
                "not_converged": len(runs) - len(converged),
                "wall_time_mean": float(np.mean([run["wall_time"] for run in runs])),
            },
        )
    return summary


def summary_dataset(summary: list[dict]) -> tablib.Dataset:
    dataset = tablib.Dataset(headers=list(SUMMARY_HEADERS), title="bench summary")
    for row in summary:
        dataset.append([row[header] for header in SUMMARY_HEADERS])
    return dataset


def run_rows(runs: Iterable[FalsificationRun]) -> list[dict]:
    return [
        {
            "method": run.method,
            "seed": int(run.seed),
            "counterexample_count": run.counterexample_count,
            "worst_phi": run.worst_phi,
            "falsified": run.falsified,
            "verified": run.verified,
            "convergence_iteration": run.convergence_iteration,
            "wall_time": run.wall_time,
            "report_path": run.report_path,
        }
        for run in runs
    ]
