#  Copyright (c) 2026 smcrc developers. See LICENSE

from ..core.errors import ParticleCollapse
from ..core.randomstream import RandomStream
from ..experiment.replicate import run_filter, row_schedule
from .base import CliBase, add_model_arguments, add_filter_arguments

import logging
logger = logging.getLogger(__name__)


class Sweep(CliBase):

    @staticmethod
    def args_run(p):
        add_model_arguments(p)
        add_filter_arguments(p)

    def cmd_run(self, args):
        config = self.experiment_config(args).validate()
        observations = config.observations()
        model = config.model.build(len(observations))
        row = config.rows()[0]
        schedule, label = row_schedule(config, row, model, observations)

        try:
            result = run_filter(row.filter, model, observations, row.particles, schedule,
                                RandomStream(config.seed), config.budget_factor * (row.particles + 1))
            collapse = None
        except ParticleCollapse as e:
            result, collapse = e.result, e

        self.print(
            f"filter\t{result.filter_name}",
            f"threshold\t{label}",
            f"N\t{row.particles}",
            f"log_Z\t{result.log_z_hat:.17g}",
            f"total_propagations\t{result.total_propagations}",
            "t\tP_t\tc_t\tlog_weight_sum")
        for t, log_sum in enumerate(result.log_weight_sums, start=1):
            p_t = row.particles if result.propagations is None else result.propagations[t - 1]
            c_t = "-" if result.thresholds is None else _fmt_threshold(result.thresholds[t - 1])
            self.print(f"{t}\t{p_t}\t{c_t}\t{log_sum:.17g}")

        if collapse is not None:
            raise collapse


def _fmt_threshold(c):
    return c.value if not isinstance(c, float) else format(c, ".17g")
