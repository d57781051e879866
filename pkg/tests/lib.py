#  Copyright (c) 2026 smcrc developers. See LICENSE

import math
import pathlib

import numpy as np

from smcrc.core.model import StateSpaceModel
from smcrc.core.randomstream import RandomStream
from smcrc.models.hmm import DiscreteHmm
from smcrc.models.lgss import LgssParams


current_path = pathlib.Path(__file__).parent
package_data_path = pathlib.Path(current_path, "../smcrc/000.package.data/")

small_lgss = LgssParams(a=0.8, q=0.25, r=0.1, m0=0.0, v0=0.25)


class ConstantWeightModel(StateSpaceModel):
    """g_t(y | x) = k for every state and observation"""

    def __init__(self, k: float, horizon: int = 5):
        super().__init__(horizon)
        self.log_k = math.log(k)

    def sample_initial(self, n, rng):
        return rng.normal(size=n)

    def sample_transition(self, t, states, rng):
        return states + rng.normal(size=len(states))

    def log_observation_density(self, t, states, y):
        return np.full(len(states), self.log_k)


def blocking_hmm() -> DiscreteHmm:
    """State 0 cannot emit symbol 1, so some candidates carry zero weight"""
    return DiscreteHmm(
        initial=np.array([0.5, 0.5]),
        transition=np.array([[0.6, 0.4], [0.3, 0.7]]),
        emission=np.array([[1.0, 0.0], [0.3, 0.7]]))


def replicate_log_z(sweep, replicates: int, seed: int) -> np.ndarray:
    """log Z of `sweep(rng)` over independent streams"""
    return np.array([sweep(RandomStream(seed, stream_id=m)).log_z_hat for m in range(replicates)])


def mean_se(log_z: np.ndarray):
    z = np.exp(log_z)
    return z.mean(), z.std(ddof=1) / math.sqrt(z.size)


def within_se(log_z: np.ndarray, target: float, k: float = 4.0) -> bool:
    mean, se = mean_se(log_z)
    return abs(mean - target) <= k * se


class TinyWeightModel(StateSpaceModel):
    """log g_t(y | x) = -800 - x^2: every weight is below the smallest double"""

    def sample_initial(self, n, rng):
        return rng.normal(size=n)

    def sample_transition(self, t, states, rng):
        return 0.5 * states + rng.normal(size=len(states))

    def log_observation_density(self, t, states, y):
        return -800.0 - np.asarray(states) ** 2
