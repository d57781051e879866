"""Pilot runs: realize a dynamic schedule once, then reuse the recorded values as fixed
thresholds so production runs keep an unbiased estimator."""

#  Copyright (c) 2026 smcrc developers. See LICENSE

from .schedule import ThresholdSchedule, PerStep

import logging
logger = logging.getLogger(__name__)


def pilot_record(schedule: ThresholdSchedule, sweep) -> PerStep:
    if sweep.thresholds is None:
        raise ValueError(f"A {sweep.filter_name} sweep records no thresholds")
    recorded = PerStep(tuple(sweep.thresholds))
    logger.info(f"Recorded {len(recorded.values)} thresholds from a {schedule.label()} pilot")
    return recorded


def run_pilot(model, observations, n: int, schedule: ThresholdSchedule, rng,
              max_propagations_per_step: int = None) -> PerStep:
    # imported here since the filters import this package
    from ..filters.rejectioncontrol import run_pfrc

    sweep = run_pfrc(model, observations, n, schedule, rng, max_propagations_per_step)
    return pilot_record(schedule, sweep)
