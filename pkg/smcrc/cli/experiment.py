#  Copyright (c) 2026 smcrc developers. See LICENSE

import pathlib

from ..experiment.csvio import emit_csv, summary_name
from ..experiment.replicate import replicate_experiment
from .base import CliBase, add_model_arguments, add_filter_arguments

import logging
logger = logging.getLogger(__name__)


class Experiment(CliBase):

    @staticmethod
    def args_experiment(p):
        add_model_arguments(p)
        add_filter_arguments(p)
        p.add_argument("-M", "--replicates", type=int)
        p.add_argument("--jobs", type=int, help="worker processes")
        p.add_argument("--out", type=pathlib.Path, help="output directory")
        p.add_argument("--baseline-particles", type=int, help="N of the reference bootstrap filter for rho")
        p.add_argument("--pilot-particles", type=int)
        p.add_argument("--pilot-seed", type=int)

    def cmd_experiment(self, args):
        config = self.experiment_config(args)
        jobs = args.jobs
        if jobs is None and args.config is None:
            jobs = self.config.getint("experiment", "jobs")
        config = config.override(
            replicates=args.replicates,
            jobs=jobs,
            baseline_particles=args.baseline_particles).validate()

        out_dir = config.resolve_path(config.output) if config.output is not None \
            else pathlib.Path(self.config.scratch_path, "experiment")
        if args.out is not None:
            out_dir = args.out

        results = replicate_experiment(config)
        emit_csv([row for row, _ in results], [records for _, records in results], out_dir)
        self.print(pathlib.Path(out_dir, summary_name).read_text().rstrip("\n"))
