"""Finite discrete hidden Markov models wrapped as state space models.

States and observation symbols are small integers. The initial distribution is the law of x_0,
the transition matrix moves x_{t-1} to x_t, and the emission matrix gives g_t(y | x) for t >= 1."""

#  Copyright (c) 2026 smcrc developers. See LICENSE

from dataclasses import dataclass

import numpy as np

from ..core.errors import InvalidModel
from ..core.model import StateSpaceModel
from ..core.randomstream import RandomStream


row_sum_tolerance = 1e-12


def _stochastic(name, m, ndim):
    m = np.array(m, dtype=float)
    if m.ndim != ndim or m.size == 0:
        raise InvalidModel(f"{name} must be a non-empty {ndim}-d array")
    if np.any(~np.isfinite(m)) or np.any(m < 0):
        raise InvalidModel(f"{name} entries must be finite and non-negative")
    if np.any(np.abs(m.sum(axis=-1) - 1.0) > row_sum_tolerance):
        raise InvalidModel(f"{name} rows must sum to 1")
    m.flags.writeable = False
    return m


@dataclass(frozen=True, eq=False)
class DiscreteHmm:
    initial: np.ndarray     # (K,)
    transition: np.ndarray  # (K, K), row-stochastic
    emission: np.ndarray    # (K, L), row-stochastic

    def __post_init__(self):
        initial = _stochastic("initial distribution", self.initial, 1)
        transition = _stochastic("transition matrix", self.transition, 2)
        emission = _stochastic("emission matrix", self.emission, 2)
        k = initial.size
        if transition.shape != (k, k) or emission.shape[0] != k:
            raise InvalidModel(
                f"Shapes disagree: initial {initial.shape}, transition {transition.shape}, "
                f"emission {emission.shape}")
        object.__setattr__(self, "initial", initial)
        object.__setattr__(self, "transition", transition)
        object.__setattr__(self, "emission", emission)

    @property
    def n_states(self):
        return self.initial.size

    @property
    def n_symbols(self):
        return self.emission.shape[1]


def random_hmm(n_states: int, n_symbols: int, rng: RandomStream) -> DiscreteHmm:
    def _rows(k, width):
        m = rng.dirichlet(np.ones(width), size=k)
        # renormalize so rows sum to 1 well within tolerance
        return m / m.sum(axis=1, keepdims=True)

    return DiscreteHmm(
        initial=_rows(1, n_states)[0],
        transition=_rows(n_states, n_states),
        emission=_rows(n_states, n_symbols))


def _categorical_rows(cdf_rows: np.ndarray, rng: RandomStream) -> np.ndarray:
    u = rng.random(cdf_rows.shape[0]) * cdf_rows[:, -1]
    idx = (cdf_rows <= u[:, None]).sum(axis=1)
    return np.minimum(idx, cdf_rows.shape[1] - 1)


class HmmModel(StateSpaceModel):
    observation_kind = "symbol"

    def __init__(self, hmm: DiscreteHmm, horizon: int = 1):
        super().__init__(horizon)
        self.hmm = hmm
        self._initial_cdf = np.cumsum(hmm.initial)
        self._transition_cdf = np.cumsum(hmm.transition, axis=1)
        self._emission_cdf = np.cumsum(hmm.emission, axis=1)
        with np.errstate(divide="ignore"):
            self._log_emission = np.log(hmm.emission)

    def sample_initial(self, n, rng: RandomStream):
        return _categorical_rows(np.tile(self._initial_cdf, (n, 1)), rng)

    def sample_transition(self, t, states, rng: RandomStream):
        return _categorical_rows(self._transition_cdf[np.asarray(states)], rng)

    def log_observation_density(self, t, states, y):
        return self._log_emission[np.asarray(states), int(y)]

    def sample_observation(self, t, states, rng: RandomStream):
        return _categorical_rows(self._emission_cdf[np.asarray(states)], rng)


def hmm_model(hmm: DiscreteHmm, horizon: int = 1) -> HmmModel:
    return HmmModel(hmm, horizon)
