#  Copyright (c) 2026 smcrc developers. See LICENSE

import pathlib

from ..core.errors import ConfigError
from ..core.randomstream import RandomStream
from ..thresholds.pilot import run_pilot
from ..thresholds.schedulefile import write_schedule
from .base import CliBase, add_model_arguments, add_filter_arguments

import logging
logger = logging.getLogger(__name__)


class Pilot(CliBase):

    @staticmethod
    def args_pilot(p):
        add_model_arguments(p)
        add_filter_arguments(p)
        p.add_argument("--out", type=pathlib.Path, required=True, help="schedule file to write")

    def cmd_pilot(self, args):
        config = self.experiment_config(args).override(filter="pfrc").validate()
        if config.threshold.startswith(("pilot:", "file:")):
            raise ConfigError("A pilot run takes a threshold such as quantile:0.2")

        observations = config.observations()
        model = config.model.build(len(observations))
        schedule = config.schedule(config.threshold)
        if not schedule.is_dynamic:
            logger.warning(f"Pilot with a fixed threshold {schedule.label()} records it unchanged")

        recorded = run_pilot(model, observations, config.particles, schedule, RandomStream(config.seed),
                             config.budget_factor * (config.particles + 1))
        write_schedule(recorded, args.out)
        self.print(f"Wrote {len(recorded.values)} thresholds from a {schedule.label()} pilot to {args.out}")
