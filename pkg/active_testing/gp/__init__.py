from .kernels import SquaredExponential
from .model import JITTER
from .model import GpModel

__all__ = ["JITTER", "GpModel", "SquaredExponential"]
