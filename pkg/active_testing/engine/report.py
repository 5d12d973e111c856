"""
Run reports.

A report is a JSON document: configuration echo, every evaluated row, the
worst counterexample with its trajectory, certificate and diagnostics. Keys
are sorted and no timestamps are written, so equal runs give equal bytes.
"""

from __future__ import annotations

import json
import math
from collections.abc import Mapping
from pathlib import Path

from active_testing import __version__
from active_testing.envs import Environment
from active_testing.exceptions import ReportError

from .config import RunConfig
from .result import RunResult

SCHEMA_VERSION = 1
COUNTEREXAMPLE_DEFINITION = "evaluated environment vectors (initialization included) with phi <= 0"

_REQUIRED = {
    "schema_version": int,
    "method": str,
    "seed": int,
    "specification": str,
    "predicates": list,
    "config": dict,
    "environment": dict,
    "history": list,
    "worst": dict,
    "counterexample_count": int,
    "counterexample_definition": str,
    "falsified": bool,
    "verified": bool,
    "stopped_early": bool,
}
_ROW_KEYS = {"index", "phase", "iteration", "w", "mu", "phi"}


def build_report(
    result: RunResult,
    config: RunConfig,
    environment: Environment,
    specification: str,
) -> dict:
    worst = result.worst
    return {
        "schema_version": SCHEMA_VERSION,
        "generator": f"active_testing {__version__}",
        "method": result.method,
        "seed": result.seed,
        "specification": specification,
        "predicates": list(result.predicates),
        "config": config.to_dict(),
        "environment": environment.spec.to_dict(),
        "history": [row.to_dict() for row in result.history],
        "worst": {
            **worst.to_dict(),
            "trajectory": result.worst_trajectory.to_dict() if result.worst_trajectory else None,
        },
        "counterexample_count": result.counterexample_count,
        "counterexample_definition": COUNTEREXAMPLE_DEFINITION,
        "falsified": result.falsified,
        "verified": result.verified,
        "stopped_early": result.stopped_early,
        "certificate": result.certificate.to_dict() if result.certificate else None,
        "diagnostics": result.diagnostics.to_dict() if result.diagnostics else None,
        "convergence_iteration": result.convergence_iteration,
    }


def validate_report(report: Mapping) -> None:
    """Raise ReportError unless report follows the current schema."""
    for key, kind in _REQUIRED.items():
        if key not in report:
            msg = f"report is missing {key!r}"
            raise ReportError(msg)
        if not isinstance(report[key], kind):
            msg = f"report field {key!r} should be {kind.__name__}, got {type(report[key]).__name__}"
            raise ReportError(msg)
    if report["schema_version"] != SCHEMA_VERSION:
        msg = f"unsupported report schema {report['schema_version']}"
        raise ReportError(msg)
    if not report["history"]:
        msg = "report has no history rows"
        raise ReportError(msg)
    for row in report["history"]:
        missing = _ROW_KEYS - row.keys()
        if missing:
            msg = f"history row {row.get('index')} lacks {', '.join(sorted(missing))}"
            raise ReportError(msg)
        if not math.isfinite(row["phi"]):
            msg = f"history row {row['index']} has a non-finite phi"
            raise ReportError(msg)
    phis = [row["phi"] for row in report["history"]]
    if report["worst"]["phi"] != min(phis):
        msg = "worst phi does not match the history"
        raise ReportError(msg)
    if report["counterexample_count"] != sum(1 for phi in phis if phi <= 0):
        msg = "counterexample count does not match the history"
        raise ReportError(msg)


def dumps_report(report: Mapping) -> str:
    return json.dumps(report, indent=2, sort_keys=True, allow_nan=False) + "\n"


def write_report(report: Mapping, path: str | Path) -> Path:
    validate_report(report)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_report(report), encoding="utf-8")
    return path
