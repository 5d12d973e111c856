from .baselines import run_baseline
from .baselines import run_method
from .certificate import check_certificate
from .config import KernelSettings
from .config import Method
from .config import OptimizerSettings
from .config import RunConfig
from .config import parse_method
from .diagnostics import c1_constant
from .diagnostics import convergence_diagnostics
from .diagnostics import convergence_iteration
from .loop import active_test
from .report import build_report
from .report import validate_report
from .report import write_report
from .result import Certificate
from .result import Diagnostics
from .result import HistoryRow
from .result import Phase
from .result import RunResult
from .rng import RandomStreams

__all__ = [
    "Certificate",
    "Diagnostics",
    "HistoryRow",
    "KernelSettings",
    "Method",
    "OptimizerSettings",
    "Phase",
    "RandomStreams",
    "RunConfig",
    "RunResult",
    "active_test",
    "build_report",
    "c1_constant",
    "check_certificate",
    "convergence_diagnostics",
    "convergence_iteration",
    "parse_method",
    "run_baseline",
    "run_method",
    "validate_report",
    "write_report",
]
