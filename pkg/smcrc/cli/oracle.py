#  Copyright (c) 2026 smcrc developers. See LICENSE

from ..core.errors import ConfigError, InvalidModel
from ..oracles.coinexact import coin_exact_expectation, coin_series_expectation
from ..oracles.enumeration import forward_loglik, path_sum_loglik
from ..oracles.kalman import kalman_loglik
from ..oracles.negbin import negbin_series, expected_propagations
from .base import CliBase, add_model_arguments

import logging
logger = logging.getLogger(__name__)


class Oracle(CliBase):

    @staticmethod
    def args_oracle(p):
        p.add_argument("which", choices=["kalman", "enumeration", "coin", "negbin"])
        add_model_arguments(p)
        p.add_argument("-N", "--particles", type=int, default=1, help="N for negbin")
        p.add_argument("-p", "--accept-prob", type=float, default=0.5, help="p for negbin")
        p.add_argument("--tolerance", type=float, default=1e-12, help="series tolerance")

    def cmd_oracle(self, args):
        getattr(self, "_oracle_" + args.which)(args)

    def _oracle_kalman(self, args):
        config = self.experiment_config(args)
        if config.model.name != "lgss":
            raise ConfigError("The Kalman oracle needs the lgss model")
        observations = config.observations()
        self.print(f"kalman_loglik\t{kalman_loglik(config.model.lgss_params(), observations):.17g}")

    def _oracle_enumeration(self, args):
        config = self.experiment_config(args)
        if config.model.name == "lgss":
            raise ConfigError("Enumeration needs a discrete model (hmm or coin)")
        hmm = config.model.hmm()
        observations = config.observations()
        self.print(f"forward_loglik\t{forward_loglik(hmm, observations):.17g}")
        try:
            self.print(f"path_sum_loglik\t{path_sum_loglik(hmm, observations):.17g}")
        except InvalidModel as e:
            logger.warning(f"Skipping the path sum: {e.message}")

    def _oracle_coin(self, args):
        exact, series = coin_exact_expectation(), coin_series_expectation()
        self.print("case\tclosed_form\tseries")
        for name in ("case1", "case2", "case3", "case4", "total"):
            self.print(f"{name}\t{getattr(exact, name):.17g}\t{getattr(series, name):.17g}")

    def _oracle_negbin(self, args):
        n, p = args.particles, args.accept_prob
        self.print(
            f"negbin_series\t{negbin_series(n, p, args.tolerance):.17g}",
            f"p_over_N\t{p / n:.17g}",
            f"expected_propagations\t{expected_propagations(n, p):.17g}")
