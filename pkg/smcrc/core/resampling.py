"""Multinomial resampling: one independent categorical draw per index, by inverse CDF over the
running cumulative sum with a single uniform per draw."""

#  Copyright (c) 2026 smcrc developers. See LICENSE

import numpy as np

from .errors import InvalidWeight, AllWeightsZero
from .randomstream import RandomStream


def _checked(weights) -> np.ndarray:
    w = np.asarray(weights, dtype=float).ravel()
    if w.size == 0:
        raise AllWeightsZero("Empty weight vector")
    if not np.all(np.isfinite(w)) or np.any(w < 0):
        raise InvalidWeight("Weights must be finite and non-negative")
    return w


def _draw(w: np.ndarray, size: int, rng: RandomStream) -> np.ndarray:
    cdf = np.cumsum(w)
    total = cdf[-1]
    if total <= 0:
        raise AllWeightsZero("All weights are zero")
    u = rng.random(size) * total
    # side="right" never lands on a zero-weight index since its cdf entry repeats the previous one
    idx = np.searchsorted(cdf, u, side="right")
    # u * total can round up to total
    return np.minimum(idx, np.flatnonzero(w)[-1])


def resample_index(weights, rng: RandomStream) -> int:
    """Index n with probability w_n / sum(w)"""
    return int(_draw(_checked(weights), 1, rng)[0])


def resample_indices(weights, size: int, rng: RandomStream) -> np.ndarray:
    return _draw(_checked(weights), size, rng)


def resample_indices_log(log_weights: np.ndarray, size: int, rng: RandomStream) -> np.ndarray:
    """As resample_indices, for weights held in the log domain"""
    lw = np.asarray(log_weights, dtype=float)
    if np.any(np.isnan(lw)) or np.any(lw == np.inf):
        raise InvalidWeight("Log weights must not be NaN or +inf")
    m = lw.max()
    if m == -np.inf:
        raise AllWeightsZero("All weights are zero")
    return _draw(np.exp(lw - m), size, rng)
