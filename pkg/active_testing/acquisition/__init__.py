from .beta import BetaMode
from .beta import BetaSchedule
from .beta import beta_sqrt_at
from .composite import composite_lcb
from .composite import confidence_bounds
from .domain import Domain
from .embedding import Embedding
from .embedding import embed
from .optimize import minimize_acquisition

__all__ = [
    "BetaMode",
    "BetaSchedule",
    "Domain",
    "Embedding",
    "beta_sqrt_at",
    "composite_lcb",
    "confidence_bounds",
    "embed",
    "minimize_acquisition",
]
