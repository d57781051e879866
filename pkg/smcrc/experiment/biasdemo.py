"""Dynamic thresholds bias the estimator. On the coin model with one particle and observation
heads, the median of the two first-pass weights gives E[Z] ~ 0.64631 while the true marginal
likelihood is 0.65. A fixed c = 0.65 stays unbiased."""

#  Copyright (c) 2026 smcrc developers. See LICENSE

from dataclasses import dataclass
from typing import List

import numpy as np

from ..models.coin import CoinModel, coin_model, HEADS
from ..oracles.coinexact import coin_exact_expectation, coin_series_expectation, CoinExpectation
from ..thresholds.schedule import Constant, DynamicQuantile
from .replicate import SweepJob, run_replicates, warn_if_biased
from .statistics import mean_and_se

import logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BiasDemoRow:
    threshold: str
    expected: float
    mean_z: float
    se_z: float

    @property
    def z_score(self) -> float:
        return (self.mean_z - self.expected) / self.se_z


@dataclass(frozen=True)
class BiasDemo:
    replicates: int
    true_z: float
    closed_form: CoinExpectation
    series: CoinExpectation
    rows: List[BiasDemoRow]


def run_bias_demo(replicates: int, seed: int, jobs: int = 1) -> BiasDemo:
    coin = CoinModel()
    model = coin_model(coin)
    observations = np.array([HEADS])
    closed_form = coin_exact_expectation()
    true_z = coin.marginal(HEADS)

    rows = []
    for schedule, expected in ((DynamicQuantile(0.5), closed_form.total), (Constant(0.65), true_z)):
        warn_if_biased(schedule)
        job = SweepJob(filter_name="pfrc", model=model, observations=observations, n=1,
                       schedule=schedule, seed=seed)
        records = run_replicates(job, replicates, jobs)
        mean, se = mean_and_se([r.log_z for r in records])
        rows.append(BiasDemoRow(threshold=schedule.label(), expected=expected, mean_z=mean, se_z=se))
        logger.info(f"bias demo {schedule.label()}: mean Z {mean:.6f} +- {se:.6f}")

    return BiasDemo(replicates=replicates, true_z=true_z, closed_form=closed_form,
                    series=coin_series_expectation(), rows=rows)


def format_bias_demo(demo: BiasDemo) -> str:
    lines = [
        f"true marginal likelihood p(y=H) = {demo.true_z:.5f}",
        "",
        "case          closed form   series",
    ]
    for name in ("case1", "case2", "case3", "case4", "total"):
        lines.append(f"{name:<12}  {getattr(demo.closed_form, name):.5f}       "
                     f"{getattr(demo.series, name):.5f}")
    lines += [
        "",
        f"Monte Carlo, N=1, M={demo.replicates}",
        "threshold       expected   mean Z     SE         z-score",
    ]
    for row in demo.rows:
        lines.append(f"{row.threshold:<14}  {row.expected:.5f}    {row.mean_z:.5f}    "
                     f"{row.se_z:.2e}   {row.z_score:+.2f}")
    return "\n".join(lines)
