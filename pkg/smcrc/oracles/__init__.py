#  Copyright (c) 2026 smcrc developers. See LICENSE

from .kalman import KalmanState, kalman_states, kalman_loglik
from .enumeration import enumeration_loglik, forward_loglik, path_sum_loglik
from .negbin import negbin_series, negbin_pmf, expected_propagations
from .coinexact import CoinExpectation, coin_exact_expectation, coin_series_expectation
