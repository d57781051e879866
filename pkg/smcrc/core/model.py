"""The state space model contract shared by every filter, and forward simulation.

Samplers work on batches: `states` is an array whose first axis runs over particles, and the
per-particle forms x ~ f_t(. | x_{t-1}) are the batch-of-one case. Samplers may only draw from
the RandomStream they are handed."""

#  Copyright (c) 2026 smcrc developers. See LICENSE

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .errors import MissingObservationSampler
from .randomstream import RandomStream

import logging
logger = logging.getLogger(__name__)


class StateSpaceModel(ABC):

    # Either "real" (continuous observations) or "symbol" (small integer observations)
    observation_kind = "real"

    def __init__(self, horizon: int):
        if horizon < 1:
            raise ValueError("Horizon must be a positive integer")
        self.horizon = int(horizon)

    @abstractmethod
    def sample_initial(self, n: int, rng: RandomStream) -> np.ndarray:
        """n draws from mu_0"""

    @abstractmethod
    def sample_transition(self, t: int, states: np.ndarray, rng: RandomStream) -> np.ndarray:
        """One draw from f_t(. | x) for every x in states"""

    @abstractmethod
    def log_observation_density(self, t: int, states: np.ndarray, y) -> np.ndarray:
        """log g_t(y | x) for every x in states; -inf where the density is zero"""

    def observation_density(self, t: int, states: np.ndarray, y) -> np.ndarray:
        return np.exp(self.log_observation_density(t, states, y))

    def sample_observation(self, t: int, states: np.ndarray, rng: RandomStream) -> np.ndarray:
        raise MissingObservationSampler(
            f"{type(self).__name__} defines an observation density but no sampler")

    def sample_observation_flagged(
            self, t: int, states: np.ndarray, rng: RandomStream) -> Tuple[np.ndarray, Optional[np.ndarray]]:
        """Observation draws plus an optional per-draw flag recording which mixture
        component produced each draw. Models without components return None."""
        return self.sample_observation(t, states, rng), None


@dataclass(frozen=True)
class Trajectory:
    states: np.ndarray        # x_{0:T}
    observations: np.ndarray  # y_{1:T}
    flags: Optional[np.ndarray] = None

    def __iter__(self):
        # unpacks as (states, observations)
        yield self.states
        yield self.observations


def simulate(model: StateSpaceModel, rng: RandomStream) -> Trajectory:
    x = model.sample_initial(1, rng)
    states, observations, flags = [x[0]], [], []
    for t in range(1, model.horizon + 1):
        x = model.sample_transition(t, x, rng)
        y, f = model.sample_observation_flagged(t, x, rng)
        states.append(x[0])
        observations.append(y[0])
        flags.append(None if f is None else f[0])

    logger.debug(f"Simulated {model.horizon} steps from {type(model).__name__}")
    return Trajectory(
        states=np.array(states),
        observations=np.array(observations),
        flags=None if flags[0] is None else np.array(flags, dtype=bool))
