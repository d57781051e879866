#  Copyright (c) 2026 smcrc developers. See LICENSE

import pathlib
import sys
from typing import TextIO

from ..configuration import Configuration
from ..core.errors import ConfigError, ErrCode, SmcError
from ..experiment.config import ExperimentConfig, ModelSpec, DataSource, PilotSpec, load_config
from ..experiment.yaml import load_yaml

import logging
logger = logging.getLogger(__name__)


def add_model_arguments(p):
    p.add_argument("--config", type=pathlib.Path, help="experiment config (YAML)")
    p.add_argument("--model", choices=["lgss", "coin", "hmm"], help="model name")
    p.add_argument("--param", action="append", default=[], metavar="KEY=VALUE",
                   help="model parameter, repeatable (e.g. outlier_prob=0.1)")
    p.add_argument("--data", type=pathlib.Path, help="dataset CSV")
    p.add_argument("--simulate-seed", type=int, help="simulate the dataset with this seed")
    p.add_argument("--horizon", type=int, help="length of simulated data")


def add_filter_arguments(p):
    p.add_argument("--filter", choices=["bpf", "pfrc", "alive"])
    p.add_argument("-N", "--particles", type=int)
    p.add_argument("--threshold", help="constant:C | quantile:Q | weighted:P1,P2,P3 | "
                                       "per-step:C1,C2,... | file:PATH | pilot:<dynamic>")
    p.add_argument("--seed", type=int)
    p.add_argument("--budget-factor", type=int,
                   help="give up on a step after budget_factor * (N + 1) propagations")


class CliBase:
    def __init__(self, config: Configuration, out: TextIO = None, err: TextIO = None):
        self.config = config
        self.out = out or sys.stdout
        self.err = err or sys.stderr

    def run(self, args) -> int:
        try:
            self._dispatch(args)
            return 0
        except SmcError as e:
            logger.error(e.message)
            print(e.error_line(), file=self.err)
            return int(e.code)
        except OSError as e:
            logger.error(f"I/O error: {e}")
            print(ConfigError(str(e)).error_line(), file=self.err)
            return int(ErrCode.ConfigError)
        except Exception as e:
            logger.error("Unexpected error: %s", e, exc_info=True)
            err = SmcError(f"{type(e).__name__}: {e}")
            print(err.error_line(), file=self.err)
            return int(ErrCode.InternalError)

    def _dispatch(self, args):
        # bias-demo -> cmd_bias_demo
        method_name = "cmd_" + args.command.replace("-", "_")
        try:
            f = getattr(self, method_name)
        except AttributeError:
            raise ConfigError(f"Unknown command: {args.command}")
        return f(args)

    def print(self, *lines):
        for line in lines:
            print(line, file=self.out)

    def experiment_config(self, args) -> ExperimentConfig:
        """The YAML config if given, with every command line flag layered on top"""
        if getattr(args, "config", None) is not None:
            config = load_config(args.config)
        elif args.model is not None:
            config = ExperimentConfig(model=ModelSpec(name=args.model))
        else:
            raise ConfigError("Give a model with --model or --config")

        params = dict(config.model.params)
        for kv in args.param:
            key, sep, value = kv.partition("=")
            if not sep:
                raise ConfigError(f"Model parameters are KEY=VALUE, got {kv!r}")
            params[key.strip()] = load_yaml(f"v: {value}").get("v")
        model = ModelSpec(name=args.model or config.model.name, params=params)

        data = config.data
        if args.data is not None:
            data = DataSource(path=args.data.resolve())
        elif args.simulate_seed is not None:
            data = DataSource(simulate_seed=args.simulate_seed, horizon=args.horizon or data.horizon)
        elif args.horizon is not None:
            data = DataSource(path=data.path, observations=data.observations,
                              simulate_seed=data.simulate_seed, horizon=args.horizon)

        budget_factor = getattr(args, "budget_factor", None)
        if budget_factor is None and getattr(args, "config", None) is None:
            budget_factor = self.config.getint("experiment", "budget_factor")

        config = config.override(
            model=model,
            data=data,
            filter=getattr(args, "filter", None),
            particles=getattr(args, "particles", None),
            threshold=getattr(args, "threshold", None),
            seed=getattr(args, "seed", None),
            budget_factor=budget_factor)

        pilot_particles = getattr(args, "pilot_particles", None)
        pilot_seed = getattr(args, "pilot_seed", None)
        if pilot_particles is not None or pilot_seed is not None:
            base = config.pilot or PilotSpec(particles=config.particles, seed=config.seed)
            config = config.override(pilot=PilotSpec(
                particles=pilot_particles if pilot_particles is not None else base.particles,
                seed=pilot_seed if pilot_seed is not None else base.seed))

        return config
