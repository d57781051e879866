"""Summary statistics across replicate sweeps.

Estimates of the marginal likelihood span hundreds of orders of magnitude on long series, so
everything here works from log Z and rescales by the largest finite value before
exponentiating. ESS and the mean/standard error ratio are invariant to that rescaling."""

#  Copyright (c) 2026 smcrc developers. See LICENSE

import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from ..core.errors import AllZeroEstimates, InsufficientData, SmcError

import logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SummaryRow:
    filter: str
    threshold: str
    N: int
    rho: float
    ess: float
    ess_per_rho: float
    var_log_z: float
    rho_var_log_z: float
    M: int
    mean_z: float
    se_z: float


def ess_across_runs(estimates: Sequence[float]) -> float:
    z = np.asarray(estimates, dtype=float)
    if np.any(np.isnan(z)) or np.any(z < 0):
        raise ValueError("Estimates must be non-negative")
    total = z.sum()
    if not total > 0:
        raise AllZeroEstimates(f"All {z.size} estimates are zero")
    return float(total ** 2 / np.sum(z ** 2))


def _rescaled(log_estimates) -> Tuple[np.ndarray, float]:
    log_z = np.asarray(log_estimates, dtype=float)
    if np.any(np.isnan(log_z)) or np.any(log_z == np.inf):
        raise ValueError("Log estimates must be finite or -inf")
    finite = log_z[np.isfinite(log_z)]
    if finite.size == 0:
        raise AllZeroEstimates(f"All {log_z.size} estimates are zero")
    m = finite.max()
    return np.exp(log_z - m), float(m)


def ess_from_log(log_estimates: Sequence[float]) -> float:
    z, _ = _rescaled(log_estimates)
    return ess_across_runs(z)


def rho(total_propagations: Sequence[int], n: int, horizon: int, baseline_particles: int = None) -> float:
    """Mean propagations per replicate relative to a bootstrap filter with `baseline_particles`
    (default N) particles over the same horizon"""
    baseline = (baseline_particles or n) * horizon
    if baseline <= 0:
        raise ValueError("Baseline propagation count must be positive")
    return float(np.mean(np.asarray(total_propagations, dtype=float)) / baseline)


def var_log_z(log_estimates: Sequence[float]) -> float:
    """Sample variance (denominator M - 1) of the finite log estimates; zero estimates are left out"""
    log_z = np.asarray(log_estimates, dtype=float)
    finite = log_z[np.isfinite(log_z)]
    if finite.size < 2:
        raise InsufficientData(f"Need two non-zero estimates for var log Z, have {finite.size}")
    return float(np.var(finite, ddof=1))


def mean_and_se(log_estimates: Sequence[float]) -> Tuple[float, float]:
    """Mean of Z and its standard error std(Z)/sqrt(M), zero estimates included"""
    count = len(log_estimates)
    try:
        z, m = _rescaled(log_estimates)
    except AllZeroEstimates:
        return 0.0, (0.0 if count > 1 else math.nan)
    scale = math.exp(m)
    if count < 2:
        return float(z.mean()) * scale, math.nan
    return float(z.mean()) * scale, float(np.std(z, ddof=1) / math.sqrt(count)) * scale


def _or_nan(f, *args):
    try:
        return f(*args)
    except SmcError as e:
        logger.warning(e.message)
        return math.nan


def summarize(filter_name: str, threshold: str, n: int, horizon: int, records,
              baseline_particles: int = None) -> SummaryRow:
    """Statistics of one grid row. Errored replicates are left out of everything; collapsed
    ones (Z = 0) count for mean Z and ESS but not for var log Z."""
    used = [r for r in records if not r.status.startswith("error")]
    if not used:
        logger.warning(f"{filter_name} {threshold}: all {len(records)} replicates failed")
        return SummaryRow(
            filter=filter_name, threshold=threshold, N=n, rho=math.nan, ess=math.nan,
            ess_per_rho=math.nan, var_log_z=math.nan, rho_var_log_z=math.nan, M=0,
            mean_z=math.nan, se_z=math.nan)
    if len(used) < len(records):
        logger.warning(f"{filter_name} {threshold}: {len(records) - len(used)} replicates failed "
                       f"and are left out of the statistics")

    log_z = np.array([r.log_z for r in used])
    collapsed = int(np.sum(log_z == -np.inf))
    if collapsed:
        logger.warning(f"{filter_name} {threshold}: {collapsed} of {len(used)} estimates are zero")

    r = rho([rec.total_propagations for rec in used], n, horizon, baseline_particles)
    ess = _or_nan(ess_from_log, log_z)
    var = _or_nan(var_log_z, log_z)
    mean, se = mean_and_se(log_z)

    return SummaryRow(
        filter=filter_name, threshold=threshold, N=n, rho=r,
        ess=ess, ess_per_rho=ess / r,
        var_log_z=var, rho_var_log_z=r * var,
        M=len(used), mean_z=mean, se_z=se)
