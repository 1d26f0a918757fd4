"""
Reproducible random streams
A master seed plus a key (stream, index, ...) always yields the same
generator, and distinct keys yield statistically independent ones.
"""

from dataclasses import dataclass
from typing import Union

import numpy as np

# stream ids, the first element of every key
GRAPH_STREAM = 0
CANDIDATE_STREAM = 1
CONFIG_STREAM = 2
TRUTH_STREAM = 3

MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class Seed:
    master: int

    def __post_init__(self):
        if not 0 <= self.master <= MAX_SEED:
            raise ValueError(f"seed must lie in [0, 2^64), got {self.master}")

    def sequence(self, *key: int) -> np.random.SeedSequence:
        return np.random.SeedSequence(entropy=self.master, spawn_key=tuple(int(k) for k in key))

    def rng(self, *key: int) -> np.random.Generator:
        return np.random.default_rng(self.sequence(*key))


SeedLike = Union[Seed, int, np.random.Generator]


def as_rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    if isinstance(seed, Seed):
        return seed.rng()
    return Seed(int(seed)).rng()
