"""Exact marginal likelihood of a discrete HMM, by the forward recursion in the log domain and,
for small problems, by summing over every state path."""

#  Copyright (c) 2026 smcrc developers. See LICENSE

import itertools
import math

import numpy as np
from scipy.special import logsumexp

from ..core.errors import InvalidModel
from ..models.hmm import DiscreteHmm


max_paths = 10 ** 6


def _log(m):
    with np.errstate(divide="ignore"):
        return np.log(m)


def _checked_observations(hmm: DiscreteHmm, observations, horizon):
    obs = [int(y) for y in observations]
    if horizon is not None:
        if horizon > len(obs):
            raise InvalidModel(f"Horizon {horizon} exceeds the {len(obs)} observations")
        obs = obs[:horizon]
    if any(not 0 <= y < hmm.n_symbols for y in obs):
        raise InvalidModel(f"Observation symbols must lie in [0, {hmm.n_symbols})")
    return obs


def forward_loglik(hmm: DiscreteHmm, observations, horizon: int = None) -> float:
    obs = _checked_observations(hmm, observations, horizon)
    log_a = _log(hmm.transition)
    log_b = _log(hmm.emission)

    # alpha over x_0; x_0 emits nothing
    log_alpha = _log(hmm.initial)
    with np.errstate(divide="ignore"):
        for y in obs:
            log_alpha = logsumexp(log_alpha[:, None] + log_a, axis=0) + log_b[:, y]
        return float(logsumexp(log_alpha))


def path_sum_loglik(hmm: DiscreteHmm, observations, horizon: int = None) -> float:
    obs = _checked_observations(hmm, observations, horizon)
    k = hmm.n_states
    if k ** (len(obs) + 1) > max_paths:
        raise InvalidModel(f"{k}^{len(obs) + 1} paths exceed the {max_paths} path limit")

    total = []
    for path in itertools.product(range(k), repeat=len(obs) + 1):
        p = hmm.initial[path[0]]
        for t, y in enumerate(obs, start=1):
            p *= hmm.transition[path[t - 1], path[t]] * hmm.emission[path[t], y]
        total.append(p)
    s = math.fsum(total)
    return math.log(s) if s > 0 else -math.inf


def enumeration_loglik(hmm: DiscreteHmm, observations, horizon: int = None) -> float:
    return forward_loglik(hmm, observations, horizon)
