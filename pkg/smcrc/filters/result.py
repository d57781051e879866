#  Copyright (c) 2026 smcrc developers. See LICENSE

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..core.particles import ParticleSet


@dataclass(frozen=True)
class AcceptDecision:
    accepted: bool
    lifted_weight: Optional[float] = None


@dataclass(frozen=True, eq=False)
class SweepResult:
    """Output of one filter run.

    log_weight_sums[t-1] is log sum_n w_t^(n). propagations[t-1] is P_t for the rejection
    filters and None for the bootstrap filter. thresholds holds the realized c_t of a rejection
    control sweep (ACCEPT_ALL where every candidate was accepted, a LogThreshold where c is below the
    double range)."""
    filter_name: str
    log_z_hat: float
    log_weight_sums: np.ndarray
    propagations: Optional[np.ndarray]
    final_particles: ParticleSet
    total_propagations: int
    thresholds: Optional[Tuple] = None
    biased: bool = False
    collapsed: bool = False

    @property
    def z_hat(self) -> float:
        return float(np.exp(self.log_z_hat))

    @property
    def weight_sums(self) -> np.ndarray:
        return np.exp(self.log_weight_sums)

    @property
    def steps(self) -> int:
        return len(self.log_weight_sums)

    def same_estimates(self, other: "SweepResult") -> bool:
        """Bit-for-bit equality of everything the estimator and the particle law depend on"""
        def _same(a, b):
            if a is None or b is None:
                return a is None and b is None
            return np.array_equal(a, b)

        return self.log_z_hat == other.log_z_hat and \
            _same(self.log_weight_sums, other.log_weight_sums) and \
            _same(self.propagations, other.propagations) and \
            self.total_propagations == other.total_propagations and \
            self.final_particles == other.final_particles and \
            self.collapsed == other.collapsed
