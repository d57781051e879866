"""Subcommands

    simulate     model -> dataset CSV
    run          one sweep; log Z and per-step propagation counts
    experiment   M replicate sweeps per grid row -> summary and replicate CSVs
    pilot        dynamic schedule -> saved schedule file
    oracle       exact values: kalman, enumeration, coin, negbin
    bias-demo    Monte Carlo against the closed form on the coin model

Each subcommand lives in its own mixin as a `cmd_<name>` method (dashes become underscores)
with an `args_<name>` static method that declares its arguments.
"""
#  Copyright (c) 2026 smcrc developers. See LICENSE

import argparse

from .base import CliBase
from .simulate import Simulate
from .sweep import Sweep
from .experiment import Experiment
from .pilot import Pilot
from .oracle import Oracle
from .biasdemo import BiasDemo


commands = ["simulate", "run", "experiment", "pilot", "oracle", "bias-demo"]


class Cli(
        Simulate,
        Sweep,
        Experiment,
        Pilot,
        Oracle,
        BiasDemo,
        CliBase):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smcrc", description="Particle filters with rejection control")
    parser.add_argument("--debug", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in commands:
        p = sub.add_parser(name)
        getattr(Cli, "args_" + name.replace("-", "_"))(p)
    return parser
