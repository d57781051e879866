"""Bootstrap particle filter and its marginal likelihood estimator
Z = prod_t (1/N) sum_n w_t^(n)"""

#  Copyright (c) 2026 smcrc developers. See LICENSE

import numpy as np

from ..core.errors import ParticleCollapse
from ..core.model import StateSpaceModel
from ..core.particles import ParticleSet
from ..core.randomstream import RandomStream
from ..core.resampling import resample_indices_log
from .acceptance import log_mean_weight
from .result import SweepResult

import logging
logger = logging.getLogger(__name__)


def check_sweep_inputs(observations, n: int):
    if n < 1:
        raise ValueError("Need at least one particle")
    if len(observations) < 1:
        raise ValueError("Need at least one observation")


def initial_particles(model: StateSpaceModel, n: int, rng: RandomStream) -> ParticleSet:
    return ParticleSet(time_index=0, states=model.sample_initial(n, rng), log_weights=np.zeros(n))


def run_bpf(model: StateSpaceModel, observations, n: int, rng: RandomStream) -> SweepResult:
    check_sweep_inputs(observations, n)

    particles = initial_particles(model, n, rng)
    log_z = 0.0
    log_sums = []

    for t, y in enumerate(observations, start=1):
        ancestors = resample_indices_log(particles.log_weights, n, rng)
        x = model.sample_transition(t, particles.states[ancestors], rng)
        log_w = model.log_observation_density(t, x, y)
        particles = ParticleSet(time_index=t, states=x, log_weights=log_w)

        log_factor = log_mean_weight(log_w, n)
        log_sums.append(log_mean_weight(log_w, 1))
        log_z += log_factor

        if log_factor == -np.inf:
            logger.debug(f"BPF collapsed at step {t}")
            result = SweepResult(
                filter_name="bpf",
                log_z_hat=-np.inf,
                log_weight_sums=np.array(log_sums),
                propagations=None,
                final_particles=particles,
                total_propagations=n * t,
                collapsed=True)
            raise ParticleCollapse(f"All {n} weights are zero at step {t}", t=t, result=result)

    return SweepResult(
        filter_name="bpf",
        log_z_hat=log_z,
        log_weight_sums=np.array(log_sums),
        propagations=None,
        final_particles=particles,
        total_propagations=n * len(log_sums))
