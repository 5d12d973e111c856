from __future__ import annotations

import numpy as np

# Each consumer of randomness draws from its own substream, so changing how
# many numbers one of them draws leaves the others untouched.
STREAMS = {
    "init-samples": 0,
    "optimizer-restarts": 1,
    "embedding": 2,
    "random-baseline": 3,
}


class RandomStreams:
    """Named generators derived from one 64-bit seed."""

    def __init__(self, seed: int):
        self.seed = int(seed)
        self._generators: dict[str, np.random.Generator] = {}

    def __getitem__(self, name: str) -> np.random.Generator:
        if name not in self._generators:
            sequence = np.random.SeedSequence(self.seed, spawn_key=(STREAMS[name],))
            self._generators[name] = np.random.default_rng(sequence)
        return self._generators[name]
