"""Run M independent sweeps of one filter, in this process or fanned out over worker processes.

Replicate m always draws from RandomStream(seed, stream_id=m), so results do not depend on the
number of workers or on the order they finish in. Grid rows share the same streams."""

#  Copyright (c) 2026 smcrc developers. See LICENSE

import math
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ..core.errors import ConfigError, ParticleCollapse, SmcError
from ..core.model import StateSpaceModel
from ..core.randomstream import RandomStream
from ..filters import run_bpf, run_pfrc, run_alive, SweepResult
from ..thresholds import ThresholdSchedule, run_pilot, parse_threshold_spec
from .config import ExperimentConfig, RowSpec
from .statistics import SummaryRow, summarize

import logging
logger = logging.getLogger(__name__)


no_threshold = "none"


@dataclass(frozen=True)
class ReplicateRecord:
    replicate: int
    log_z: float
    total_propagations: int
    status: str  # ok | collapsed | error:<code>

    @property
    def z(self) -> float:
        return math.exp(self.log_z)


def run_filter(filter_name: str, model: StateSpaceModel, observations, n: int,
               schedule: Optional[ThresholdSchedule], rng: RandomStream,
               budget: int = None) -> SweepResult:
    if filter_name == "bpf":
        return run_bpf(model, observations, n, rng)
    if filter_name == "alive":
        return run_alive(model, observations, n, rng, budget)
    if filter_name == "pfrc":
        if schedule is None:
            raise ConfigError("The pfrc filter needs a threshold")
        return run_pfrc(model, observations, n, schedule, rng, budget)
    raise ConfigError(f"Unknown filter {filter_name!r}")


@dataclass(frozen=True)
class SweepJob:
    """Everything a worker process needs for one replicate; must stay picklable"""
    filter_name: str
    model: StateSpaceModel
    observations: np.ndarray
    n: int
    schedule: Optional[ThresholdSchedule]
    seed: int
    budget: Optional[int] = None

    def run(self, m: int) -> ReplicateRecord:
        rng = RandomStream(self.seed, stream_id=m)
        try:
            result = run_filter(self.filter_name, self.model, self.observations, self.n,
                                self.schedule, rng, self.budget)
            status = "ok"
        except ParticleCollapse as e:
            logger.debug(f"Replicate {m}: {e.message}")
            result, status = e.result, "collapsed"
        except SmcError as e:
            logger.warning(f"Replicate {m} failed: {e.message}")
            return ReplicateRecord(replicate=m, log_z=math.nan, total_propagations=0,
                                   status=f"error:{e.code.name}")

        return ReplicateRecord(
            replicate=m, log_z=float(result.log_z_hat),
            total_propagations=int(result.total_propagations), status=status)

    def run_block(self, start: int, stop: int) -> List[ReplicateRecord]:
        return [self.run(m) for m in range(start, stop)]


def run_replicates(job: SweepJob, replicates: int, jobs: int = 1) -> List[ReplicateRecord]:
    if jobs <= 1:
        return job.run_block(0, replicates)

    # a few blocks per worker keeps the pool busy without paying for one future per replicate
    block = max(1, -(-replicates // (4 * jobs)))
    records = []
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        futures = [executor.submit(job.run_block, start, min(start + block, replicates))
                   for start in range(0, replicates, block)]
        for future in as_completed(futures):
            records.extend(future.result())
    return sorted(records, key=lambda r: r.replicate)


def warn_if_biased(schedule: ThresholdSchedule):
    if schedule.is_dynamic:
        logger.warning(f"Dynamic threshold {schedule.label()}: the estimates of Z are biased")


def row_schedule(config: ExperimentConfig, row: RowSpec, model, observations) -> Tuple[Optional[ThresholdSchedule], str]:
    """(schedule, label). A `pilot:<dynamic spec>` threshold is realized once with the
    config's pilot settings and then used as fixed per-step values."""
    if row.filter != "pfrc":
        return None, no_threshold

    if row.threshold.startswith("pilot:"):
        if config.pilot is None:
            raise ConfigError("A pilot threshold needs `pilot: {particles, seed}` in the config")
        dynamic = parse_threshold_spec(row.threshold[len("pilot:"):])
        schedule = run_pilot(model, observations, config.pilot.particles, dynamic,
                             RandomStream(config.pilot.seed),
                             config.budget_factor * (config.pilot.particles + 1))
        return schedule, f"pilot:{dynamic.label()}"

    schedule = config.schedule(row.threshold)
    warn_if_biased(schedule)
    return schedule, schedule.label()


def replicate_experiment(config: ExperimentConfig) -> List[Tuple[SummaryRow, List[ReplicateRecord]]]:
    config.validate()
    observations = config.observations()
    horizon = len(observations)
    model = config.model.build(horizon)

    out = []
    for i, row in enumerate(config.rows()):
        schedule, label = row_schedule(config, row, model, observations)
        logger.info(f"Row {i}: {row.filter} N={row.particles} threshold={label} "
                    f"M={config.replicates} jobs={config.jobs}")
        job = SweepJob(
            filter_name=row.filter, model=model, observations=observations, n=row.particles,
            schedule=schedule, seed=config.seed, budget=config.budget_factor * (row.particles + 1))
        records = run_replicates(job, config.replicates, config.jobs)
        summary = summarize(row.filter, label, row.particles, horizon, records,
                            config.baseline_particles)
        out.append((summary, records))

    return out
