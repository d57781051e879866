#  Copyright (c) 2026 smcrc developers. See LICENSE

from ..core.errors import ConfigError
from ..experiment.biasdemo import run_bias_demo, format_bias_demo
from .base import CliBase

import logging
logger = logging.getLogger(__name__)


class BiasDemo(CliBase):

    @staticmethod
    def args_bias_demo(p):
        p.add_argument("-M", "--replicates", type=int)
        p.add_argument("--seed", type=int)
        p.add_argument("--jobs", type=int)

    def cmd_bias_demo(self, args):
        if args.seed is None:
            raise ConfigError("A seed is required (--seed)")
        replicates = args.replicates
        if replicates is None:
            replicates = self.config.getint("bias-demo", "replicates")
        jobs = args.jobs
        if jobs is None:
            jobs = self.config.getint("experiment", "jobs")
        if replicates < 2:
            raise ConfigError("The bias demo needs at least two replicates")
        if jobs < 1:
            raise ConfigError("Need at least one job")

        self.print(format_bias_demo(run_bias_demo(replicates, args.seed, jobs)))
