"""The acceptance step of rejection control and the per-step estimator factor.

A candidate of weight w is accepted with probability min(1, w/c) and its weight lifted to
max(w, c). All arithmetic happens on log weights; the ratio is exp(log w - log c) clamped to 1."""

#  Copyright (c) 2026 smcrc developers. See LICENSE

import math
from typing import Tuple

import numpy as np

from ..core.errors import InvalidThreshold, InvalidWeight, InvalidCount
from ..core.randomstream import RandomStream
from .result import AcceptDecision


def log_acceptance_probability(log_w: np.ndarray, log_c: float) -> np.ndarray:
    return np.minimum(np.asarray(log_w, dtype=float) - log_c, 0.0)


def acceptance_probability(log_w: np.ndarray, log_c: float) -> np.ndarray:
    return np.exp(log_acceptance_probability(log_w, log_c))


def rejection_control(log_w: np.ndarray, log_c: float, u: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """(accepted mask, lifted log weights)"""
    accepted = u < acceptance_probability(log_w, log_c)
    return accepted, np.maximum(log_w, log_c)


# The two policies below ignore u, but the caller draws it anyway so every policy consumes the
# same random numbers.
def alive(log_w: np.ndarray, log_c, u: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    return log_w > -np.inf, log_w


def accept_all(log_w: np.ndarray, log_c, u: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    return np.ones(log_w.shape, dtype=bool), log_w


def _log_threshold(c) -> float:
    c = float(c)
    if not math.isfinite(c) or c <= 0:
        raise InvalidThreshold(f"Threshold must be positive and finite, got {c}")
    return math.log(c)


def accept_step(candidate_weight: float, c: float, rng: RandomStream) -> AcceptDecision:
    log_c = _log_threshold(c)
    w = float(candidate_weight)
    if not math.isfinite(w) or w < 0:
        raise InvalidWeight(f"Candidate weight must be finite and non-negative, got {w}")

    log_w = np.array([math.log(w) if w > 0 else -np.inf])
    accepted, lifted = rejection_control(log_w, log_c, rng.random(1))
    if not accepted[0]:
        return AcceptDecision(accepted=False)
    return AcceptDecision(accepted=True, lifted_weight=max(w, float(c)))


def log_mean_weight(log_w: np.ndarray, denominator: int) -> float:
    """log(sum(w) / denominator)"""
    m = float(np.max(log_w))
    if m == -np.inf:
        return -np.inf
    return m + math.log(float(np.sum(np.exp(log_w - m))) / denominator)


def step_factor_pfrc(weight_sum: float, propagations: int) -> float:
    if propagations < 2:
        raise InvalidCount(f"P_t must be at least 2, got {propagations}")
    return weight_sum / (propagations - 1)
