"""Seeded random streams. A stream is fully determined by (seed, stream_id); lanes that run
concurrently each own their own stream."""

#  Copyright (c) 2026 smcrc developers. See LICENSE

from typing import Tuple

import numpy as np


class RandomStream:

    def __init__(self, seed: int, stream_id: int = 0, _lanes: Tuple[int, ...] = ()):
        if seed < 0 or stream_id < 0:
            raise ValueError("seed and stream_id must be non-negative")
        self.seed = int(seed)
        self.stream_id = int(stream_id)
        self._lanes = tuple(_lanes)
        spawn_key = (self.stream_id,) + self._lanes
        self._gen = np.random.Generator(
            np.random.PCG64(np.random.SeedSequence(self.seed, spawn_key=spawn_key)))

    def __repr__(self):
        lanes = f", lanes={self._lanes}" if self._lanes else ""
        return f"RandomStream(seed={self.seed}, stream_id={self.stream_id}{lanes})"

    # A pickled stream is rebuilt from its key when shipped to a worker process, so it
    # always restarts at the beginning of its sequence
    def __reduce__(self):
        return RandomStream, (self.seed, self.stream_id, self._lanes)

    def substream(self, lane: int) -> "RandomStream":
        """Independent stream for a concurrent lane of this stream"""
        return RandomStream(self.seed, self.stream_id, self._lanes + (int(lane),))

    def random(self, size=None):
        return self._gen.random(size)

    def normal(self, loc=0.0, scale=1.0, size=None):
        return self._gen.normal(loc, scale, size)

    def dirichlet(self, alpha, size=None):
        return self._gen.dirichlet(alpha, size)
