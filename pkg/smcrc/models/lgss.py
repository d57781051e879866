"""Scalar linear Gaussian state space model

    x_0 ~ N(m0, v0),   x_t ~ N(a x_{t-1}, q),   y_t ~ N(x_t, r)

with an optional outlier-contaminated data generator
y_t ~ (1 - outlier_prob) N(x_t, r) + outlier_prob N(0, outlier_var).
The contamination only affects simulation; filters always weight with the clean density.
All second parameters of N(., .) are variances."""

#  Copyright (c) 2026 smcrc developers. See LICENSE

import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import norm

from ..core.errors import InvalidModel
from ..core.model import StateSpaceModel
from ..core.randomstream import RandomStream


@dataclass(frozen=True)
class LgssParams:
    a: float = 0.8
    q: float = 0.25
    r: float = 0.1
    m0: float = 0.0
    v0: float = 0.25
    outlier_prob: float = 0.0
    outlier_var: float = 1.0

    def __post_init__(self):
        # q = v0 = 0 are allowed: a noiseless chain is still a valid (degenerate) model
        if not all(math.isfinite(v) for v in (self.a, self.q, self.r, self.m0, self.v0, self.outlier_var)):
            raise InvalidModel("LGSS parameters must be finite")
        if self.q < 0 or self.v0 < 0:
            raise InvalidModel(f"Variances q, v0 must be non-negative (q={self.q}, v0={self.v0})")
        if self.r <= 0 or self.outlier_var <= 0:
            raise InvalidModel(f"Variances r, outlier_var must be positive (r={self.r}, outlier_var={self.outlier_var})")
        if not 0 <= self.outlier_prob <= 1:
            raise InvalidModel(f"outlier_prob must lie in [0, 1], got {self.outlier_prob}")

    def clean(self) -> "LgssParams":
        return LgssParams(a=self.a, q=self.q, r=self.r, m0=self.m0, v0=self.v0)


# Values used for the outlier experiment
outlier_experiment_params = LgssParams(a=0.8, q=0.25, r=0.1, m0=0.0, v0=0.25, outlier_prob=0.1, outlier_var=1.0)


class LgssModel(StateSpaceModel):

    def __init__(self, params: LgssParams, horizon: int = 100):
        super().__init__(horizon)
        self.params = params
        self._sd_r = math.sqrt(params.r)

    def sample_initial(self, n, rng: RandomStream):
        return rng.normal(self.params.m0, math.sqrt(self.params.v0), size=n)

    def sample_transition(self, t, states, rng: RandomStream):
        return rng.normal(self.params.a * states, math.sqrt(self.params.q))

    def log_observation_density(self, t, states, y):
        return norm.logpdf(float(y), loc=states, scale=self._sd_r)

    def sample_observation(self, t, states, rng: RandomStream):
        return self.sample_observation_flagged(t, states, rng)[0]

    def sample_observation_flagged(self, t, states, rng: RandomStream):
        states = np.asarray(states, dtype=float)
        p = self.params
        clean = rng.normal(states, self._sd_r)
        if p.outlier_prob == 0:
            return clean, np.zeros(states.shape, dtype=bool)
        outlier = rng.random(states.shape) < p.outlier_prob
        wild = rng.normal(0.0, math.sqrt(p.outlier_var), size=states.shape)
        return np.where(outlier, wild, clean), outlier


def lgss_model(params: LgssParams, horizon: int = 100) -> LgssModel:
    return LgssModel(params, horizon)
