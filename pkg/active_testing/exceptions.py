"""Exceptions raised across the active testing toolkit."""

from __future__ import annotations

from collections.abc import Iterable
from collections.abc import Sequence


class ActiveTestingError(Exception):
    """Base class for every error the toolkit raises on purpose."""


# Specifications
# ------------------------------------------------------------------------------
class SpecError(ActiveTestingError):
    pass


class SpecSyntaxError(SpecError):
    def __init__(self, message: str, line: int, column: int, expected: Iterable[str]):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        expected_text = ", ".join(self.expected) or "nothing"
        super().__init__(f"{message} at line {line}, column {column} (expected one of: {expected_text})")


class UnknownOperatorError(SpecSyntaxError):
    def __init__(self, operator: str, line: int, column: int, expected: Iterable[str]):
        self.operator = operator
        super().__init__(f"unknown operator {operator!r}", line, column, expected)


class NotInNormalFormError(SpecError):
    pass


class EvaluationError(SpecError, ValueError):
    pass


# Numerics
# ------------------------------------------------------------------------------
class DimensionError(ActiveTestingError, ValueError):
    pass


class GpError(ActiveTestingError):
    pass


class CholeskyBreakdownError(GpError):
    def __init__(self, point: Sequence[float], pivot: float):
        self.point = tuple(float(v) for v in point)
        self.pivot = pivot
        super().__init__(
            f"Cholesky update broke down at w={list(self.point)} (pivot {pivot!r} is not positive)",
        )


class AcquisitionError(ActiveTestingError):
    pass


# Environments
# ------------------------------------------------------------------------------
class SimulationError(ActiveTestingError):
    pass


class ProtocolError(SimulationError):
    def __init__(self, message: str, request_id: int | None = None, payload: str | None = None):
        self.request_id = request_id
        self.payload = payload
        prefix = f"request {request_id}: " if request_id is not None else ""
        super().__init__(f"{prefix}{message}")


# Runs
# ------------------------------------------------------------------------------
class ConfigError(ActiveTestingError):
    pass


class EngineError(ActiveTestingError):
    def __init__(self, message: str, iteration: int):
        self.iteration = iteration
        super().__init__(f"iteration {iteration}: {message}")


class ReportError(ActiveTestingError):
    pass
