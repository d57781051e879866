"""Particle filter with rejection control (PF-RC) and its limiting case, the alive particle filter.

Each step fills N slots plus one additional particle (lane N). Every lane repeats
resample -> propagate -> weight -> accept until acceptance; the additional particle is then
discarded, but its propagations count towards P_t. The estimator is
Z = prod_t sum_n w_t^(n) / (P_t - 1).

Lanes are independent given S_{t-1}, so they run in vectorized rounds: a round draws one
resampling uniform per pending lane, then the model's transition randomness, then one acceptance
uniform per pending lane. The first round of a step is the first pass that dynamic thresholds
are computed from."""

#  Copyright (c) 2026 smcrc developers. See LICENSE

from dataclasses import replace
from typing import Callable, Tuple

import numpy as np

from ..core.errors import ParticleCollapse, PropagationBudgetExceeded
from ..core.model import StateSpaceModel
from ..core.particles import ParticleSet
from ..core.randomstream import RandomStream
from ..core.resampling import resample_indices_log
from ..thresholds.schedule import ThresholdSchedule, ACCEPT_ALL
from .acceptance import rejection_control, alive, accept_all, log_mean_weight
from .bpf import initial_particles, check_sweep_inputs
from .result import SweepResult

import logging
logger = logging.getLogger(__name__)


budget_factor = 1000


def default_budget(n: int) -> int:
    return budget_factor * (n + 1)


# (t, first-pass log weights of all N+1 lanes) -> (c_t, log c_t, acceptance policy)
StepRule = Callable[[int, np.ndarray], Tuple[object, float, Callable]]


def _propagate(model, t, y, prev: ParticleSet, count: int, rng: RandomStream):
    ancestors = resample_indices_log(prev.log_weights, count, rng)
    x = model.sample_transition(t, prev.states[ancestors], rng)
    return x, model.log_observation_density(t, x, y)


def rejection_step(model: StateSpaceModel, t: int, y, prev: ParticleSet, n: int,
                   step_rule: StepRule, rng: RandomStream, budget: int):
    """Returns (states, lifted log weights, P_t, c_t) for the N slots"""
    lanes = n + 1
    x, log_w = _propagate(model, t, y, prev, lanes, rng)
    propagations = lanes
    threshold, log_c, policy = step_rule(t, log_w)

    out_states = np.array(x, copy=True)
    out_log_w = np.empty(lanes)
    pending = np.arange(lanes)

    while True:
        accepted, lifted = policy(log_w, log_c, rng.random(pending.size))
        done = pending[accepted]
        out_states[done] = x[accepted]
        out_log_w[done] = lifted[accepted]
        pending = pending[~accepted]
        if pending.size == 0:
            break

        if propagations + pending.size > budget:
            raise PropagationBudgetExceeded(t=t, propagations=propagations, budget=budget)
        x, log_w = _propagate(model, t, y, prev, pending.size, rng)
        propagations += pending.size

    if log_c is not None and policy is rejection_control:
        assert np.all(out_log_w >= log_c), "lifted weight below threshold"

    return out_states[:n], out_log_w[:n], propagations, threshold


def _sweep(filter_name: str, model: StateSpaceModel, observations, n: int, step_rule: StepRule,
           rng: RandomStream, budget: int, biased: bool) -> SweepResult:
    check_sweep_inputs(observations, n)
    if budget is None:
        budget = default_budget(n)
    if budget <= n + 1:
        raise ValueError(f"Propagation budget {budget} must exceed N + 1 = {n + 1}")

    particles = initial_particles(model, n, rng)
    log_z = 0.0
    log_sums, counts, thresholds = [], [], []

    for t, y in enumerate(observations, start=1):
        states, log_w, p_t, c_t = rejection_step(model, t, y, particles, n, step_rule, rng, budget)
        particles = ParticleSet(time_index=t, states=states, log_weights=log_w)

        log_sums.append(log_mean_weight(log_w, 1))
        counts.append(p_t)
        thresholds.append(c_t)
        log_factor = log_mean_weight(log_w, p_t - 1)
        log_z += log_factor
        logger.debug(f"{filter_name} step {t}: P_t={p_t} c_t={c_t!r}")

        if log_factor == -np.inf:
            result = SweepResult(
                filter_name=filter_name,
                log_z_hat=-np.inf,
                log_weight_sums=np.array(log_sums),
                propagations=np.array(counts, dtype=np.int64),
                final_particles=particles,
                total_propagations=int(sum(counts)),
                thresholds=tuple(thresholds),
                biased=biased,
                collapsed=True)
            raise ParticleCollapse(f"All {n} accepted weights are zero at step {t}", t=t, result=result)

    return SweepResult(
        filter_name=filter_name,
        log_z_hat=log_z,
        log_weight_sums=np.array(log_sums),
        propagations=np.array(counts, dtype=np.int64),
        final_particles=particles,
        total_propagations=int(sum(counts)),
        thresholds=tuple(thresholds),
        biased=biased)


def _schedule_rule(schedule: ThresholdSchedule, n: int) -> StepRule:

    def rule(t, first_pass_log_w):
        if schedule.is_dynamic:
            c, log_c = schedule.log_threshold_for_step(t, first_pass_log_w, n_lanes=n + 1)
        else:
            c, log_c = schedule.log_threshold_for_step(t)
        if c is ACCEPT_ALL:
            return c, None, accept_all
        return c, log_c, rejection_control

    return rule


def _alive_rule(t, first_pass_log_w):
    return None, None, alive


def run_pfrc(model: StateSpaceModel, observations, n: int, schedule: ThresholdSchedule,
             rng: RandomStream, max_propagations_per_step: int = None) -> SweepResult:
    if schedule.is_dynamic:
        logger.debug("Dynamic thresholds: the marginal likelihood estimate is biased")
    return _sweep("pfrc", model, observations, n, _schedule_rule(schedule, n), rng,
                  max_propagations_per_step, biased=schedule.is_dynamic)


def run_alive(model: StateSpaceModel, observations, n: int, rng: RandomStream,
              max_propagations_per_step: int = None) -> SweepResult:
    result = _sweep("alive", model, observations, n, _alive_rule, rng,
                    max_propagations_per_step, biased=False)
    # no thresholds in the alive filter
    return replace(result, thresholds=None)
