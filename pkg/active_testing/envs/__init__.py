from .car import CAR_GAINS
from .car import calibrate_car_gains
from .car import simulate_car
from .external import ExternalSimulator
from .external import ReplyMode
from .functionals import FUNCTIONALS
from .functionals import PredicateBinding
from .functionals import eval_predicate
from .mountain_car import MOUNTAIN_CAR_DOMAIN
from .mountain_car import simulate_mountain_car
from .registry import EnvKind
from .registry import EnvSpec
from .registry import Environment
from .registry import Evaluation
from .registry import build_environment
from .registry import default_bindings
from .sincos import simulate_sincos
from .trajectory import Trajectory

__all__ = [
    "CAR_GAINS",
    "FUNCTIONALS",
    "MOUNTAIN_CAR_DOMAIN",
    "EnvKind",
    "EnvSpec",
    "Environment",
    "Evaluation",
    "ExternalSimulator",
    "PredicateBinding",
    "ReplyMode",
    "Trajectory",
    "build_environment",
    "calibrate_car_gains",
    "default_bindings",
    "eval_predicate",
    "simulate_car",
    "simulate_mountain_car",
    "simulate_sincos",
]
