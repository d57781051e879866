#  Copyright (c) 2026 smcrc developers. See LICENSE

from dataclasses import dataclass
from typing import Any, Iterator

import numpy as np
from scipy.special import logsumexp

from .errors import InvalidWeight


@dataclass(frozen=True)
class Particle:
    state: Any
    log_weight: float

    @property
    def weight(self):
        return float(np.exp(self.log_weight))


@dataclass(frozen=True, eq=False)
class ParticleSet:
    """N weighted states at one time step. States are held as one array whose first axis
    runs over particles; weights are held in the log domain."""
    time_index: int
    states: np.ndarray
    log_weights: np.ndarray

    def __post_init__(self):
        states = np.array(self.states)
        log_weights = np.array(self.log_weights, dtype=float)
        if log_weights.ndim != 1 or log_weights.size < 1:
            raise InvalidWeight("A particle set needs at least one particle")
        if states.shape[0] != log_weights.size:
            raise InvalidWeight(
                f"{states.shape[0]} states but {log_weights.size} weights")
        if np.any(np.isnan(log_weights)) or np.any(log_weights == np.inf):
            raise InvalidWeight("Weights must be finite and non-negative")
        states.flags.writeable = False
        log_weights.flags.writeable = False
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "log_weights", log_weights)

    def __len__(self):
        return self.log_weights.size

    def __iter__(self) -> Iterator[Particle]:
        for x, lw in zip(self.states, self.log_weights):
            yield Particle(state=x, log_weight=float(lw))

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.time_index == other.time_index and \
            np.array_equal(self.states, other.states) and \
            np.array_equal(self.log_weights, other.log_weights)

    @property
    def weights(self) -> np.ndarray:
        return np.exp(self.log_weights)

    @property
    def log_weight_sum(self) -> float:
        return float(logsumexp(self.log_weights))

    def can_resample(self) -> bool:
        return bool(np.any(self.log_weights > -np.inf))
