import numpy as np
import pytest

from .factories import random_ast


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20180521)


@pytest.fixture
def make_ast(rng):
    return lambda depth=6: random_ast(rng, depth)
