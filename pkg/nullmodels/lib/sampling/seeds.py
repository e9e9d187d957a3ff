from enum import IntEnum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class Stream(IntEnum):
    """Purpose tags; each tag keys an independent random stream"""

    DEGREES = 1
    MATCHING = 2
    WEIGHTS = 3
    IRG_PAIRS = 4
    IRG_SKIPPING = 5
    RADII = 6
    ANGLES = 7
    STABLE = 8


class SeedSpec(BaseModel):
    """Master seed plus realization index.

    Every draw comes from a Philox (counter-based) generator keyed by
    (master_seed, stream_id, purpose, *index), so a realization never depends
    on how many other realizations ran before it or on which worker.
    """

    model_config = ConfigDict(frozen=True)

    master_seed: int = Field(0, ge=0, lt=2 ** 64)
    stream_id: int = Field(0, ge=0)

    def sequence(self, stream: Stream, *index: int) -> np.random.SeedSequence:
        key = (self.stream_id, int(stream)) + tuple(int(i) for i in index)
        return np.random.SeedSequence(self.master_seed, spawn_key=key)

    def rng(self, stream: Stream, *index: int) -> np.random.Generator:
        return np.random.Generator(np.random.Philox(self.sequence(stream, *index)))

    def for_stream(self, stream_id: int) -> "SeedSpec":
        return SeedSpec(master_seed=self.master_seed, stream_id=stream_id)


def row_uniforms(seed: SeedSpec, u: int, n: int) -> np.ndarray:
    """Uniforms for the pairs (u, v), v = u+1..n-1, in that order.

    The value for a pair depends only on (seed, u, v), so any strategy that
    evaluates pair (u, v) sees the same draw.
    """
    return seed.rng(Stream.IRG_PAIRS, u).random(n - u - 1)
