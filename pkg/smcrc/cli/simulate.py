#  Copyright (c) 2026 smcrc developers. See LICENSE

import pathlib

from ..core.errors import ConfigError
from ..core.model import simulate
from ..core.randomstream import RandomStream
from ..models.datasets import write_dataset
from .base import CliBase, add_model_arguments

import logging
logger = logging.getLogger(__name__)


class Simulate(CliBase):

    @staticmethod
    def args_simulate(p):
        add_model_arguments(p)
        p.add_argument("--seed", type=int)
        p.add_argument("--out", type=pathlib.Path, required=True, help="dataset CSV to write")
        p.add_argument("--with-states", action="store_true", help="also write <out>.states.csv")

    def cmd_simulate(self, args):
        config = self.experiment_config(args)
        seed = args.seed if args.seed is not None else config.data.simulate_seed
        if seed is None:
            raise ConfigError("A seed is required (--seed)")

        model = config.model.build(config.data.horizon)
        data = simulate(model, RandomStream(seed))
        write_dataset(args.out, data, kind=model.observation_kind, with_states=args.with_states)
        self.print(f"Wrote {model.horizon} observations to {args.out}")
