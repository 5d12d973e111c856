import numpy as np

from active_testing.speclang import And
from active_testing.speclang import Atom
from active_testing.speclang import Iff
from active_testing.speclang import Implies
from active_testing.speclang import Not
from active_testing.speclang import Or

NAMES = ("mu1", "mu2", "mu3", "mu4", "speed", "gap")


def random_ast(rng: np.random.Generator, depth: int):
    """Random formula over NAMES using every connective."""
    if depth == 0 or rng.random() < 0.2:  # noqa: PLR2004
        return Atom(NAMES[rng.integers(len(NAMES))])
    kind = rng.integers(6)
    if kind == 0:
        return Not(random_ast(rng, depth - 1))
    node = (And, Or, Implies, Iff, And)[kind - 1]
    return node(random_ast(rng, depth - 1), random_ast(rng, depth - 1))
