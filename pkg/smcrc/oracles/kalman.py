"""Exact log p(y_{1:T}) for the scalar linear Gaussian model by the Kalman recursions"""

#  Copyright (c) 2026 smcrc developers. See LICENSE

import math
from dataclasses import dataclass
from typing import Iterator

from scipy.stats import norm

from ..core.errors import NonPositiveVariance
from ..models.lgss import LgssParams


@dataclass(frozen=True)
class KalmanState:
    mean: float        # predictive mean of y_t
    variance: float    # predictive variance of y_t
    loglik: float      # log p(y_{1:t})


def kalman_states(params: LgssParams, observations) -> Iterator[KalmanState]:
    a, q, r = params.a, params.q, params.r
    if r <= 0 or q < 0 or params.v0 < 0:
        raise NonPositiveVariance(f"Need r > 0, q >= 0, v0 >= 0 (r={r}, q={q}, v0={params.v0})")

    m, p = params.m0, params.v0
    loglik = 0.0
    for y in observations:
        m, p = a * m, a * a * p + q
        s = p + r
        if not s > 0:
            raise NonPositiveVariance(f"Predictive variance {s} is not positive")
        loglik += float(norm.logpdf(float(y), loc=m, scale=math.sqrt(s)))
        yield KalmanState(mean=m, variance=s, loglik=loglik)

        gain = p / s
        m, p = m + gain * (float(y) - m), (1 - gain) * p


def kalman_loglik(params: LgssParams, observations) -> float:
    loglik = 0.0
    for state in kalman_states(params, observations):
        loglik = state.loglik
    return loglik
