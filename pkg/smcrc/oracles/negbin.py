"""The number of propagations P_t of one rejection control step is negative binomial: N + 1
successes with per-candidate acceptance probability p. The estimator stays unbiased because

    sum_{D >= N+1} 1/(D-1) C(D-1, N) p^(N+1) (1-p)^(D-N-1) = p / N

and `negbin_series` evaluates the left hand side numerically."""

#  Copyright (c) 2026 smcrc developers. See LICENSE

import math

import numpy as np
from scipy.special import gammaln
from scipy.stats import nbinom

from ..core.errors import ConvergenceFailure

import logging
logger = logging.getLogger(__name__)


chunk_size = 4096
max_terms = 10 ** 8


def _check(n, p):
    if n < 1:
        raise ValueError(f"N must be a positive integer, got {n}")
    if not 0 < p <= 1:
        raise ValueError(f"p must lie in (0, 1], got {p}")


def negbin_pmf(d, n: int, p: float):
    """P(P_t = d)"""
    _check(n, p)
    return nbinom.pmf(np.asarray(d) - (n + 1), n + 1, p)


def expected_propagations(n: int, p: float) -> float:
    _check(n, p)
    return (n + 1) / p


def _log_terms(d: np.ndarray, n: int, p: float) -> np.ndarray:
    k = d - n - 1
    with np.errstate(divide="ignore", invalid="ignore"):
        failures = np.where(k == 0, 0.0, k * np.log1p(-p))
    return (-np.log(d - 1.0) + gammaln(d) - gammaln(n + 1.0) - gammaln(d - n)
            + (n + 1) * math.log(p) + failures)


def negbin_series(n: int, p: float, tolerance: float = 1e-12) -> float:
    _check(n, p)
    if tolerance <= 0:
        raise ValueError("Tolerance must be positive")

    parts = []
    start = n + 1
    while True:
        d = np.arange(start, start + chunk_size, dtype=float)
        parts.extend(np.exp(_log_terms(d, n, p)))
        d_max = start + chunk_size - 1
        # the rest of the series is at most the tail mass of P_t divided by d_max
        if nbinom.sf(d_max - (n + 1), n + 1, p) / d_max < tolerance:
            break
        start = d_max + 1
        if start - (n + 1) > max_terms:
            raise ConvergenceFailure(
                f"Series for N={n}, p={p} did not reach tolerance {tolerance} in {max_terms} terms")

    logger.debug(f"negbin series N={n} p={p}: {len(parts)} terms")
    return math.fsum(parts)
