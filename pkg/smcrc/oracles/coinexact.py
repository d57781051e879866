"""Exact expectation of the rejection control estimator on the coin model with N = 1, observation
heads and the median of the two first-pass candidate weights as a dynamic threshold.

The four equally likely first passes (slot candidate, additional candidate) are
    case 1: (B, B) weights (0.8, 0.8), threshold 0.8
    case 2: (F, F) weights (0.5, 0.5), threshold 0.5
    case 3: (B, F) weights (0.8, 0.5), threshold 0.65
    case 4: (F, B) weights (0.5, 0.8), threshold 0.65
With p_F = 0.5/0.65 the acceptance probability of a first-pass fair candidate and
p_A = 0.5 + 0.5 p_F that of a fresh redraw. The average is not 0.65."""

#  Copyright (c) 2026 smcrc developers. See LICENSE

import math
from dataclasses import dataclass

from ..core.errors import ConvergenceFailure

fair_weight = 0.5
biased_weight = 0.8
median_threshold = 0.65

p_fair = fair_weight / median_threshold
p_accept = 0.5 * 1 + 0.5 * p_fair


@dataclass(frozen=True)
class CoinExpectation:
    case1: float
    case2: float
    case3: float
    case4: float

    @property
    def total(self) -> float:
        return 0.25 * (self.case1 + self.case2 + self.case3 + self.case4)


def coin_exact_expectation() -> CoinExpectation:
    pa = p_accept
    # sum_{P >= 3} (1 - p_A)^(P-3) / (P - 1)
    series = (pa - math.log(pa) - 1) / (1 - pa) ** 2
    return CoinExpectation(
        case1=biased_weight,
        case2=fair_weight,
        case3=biased_weight * (p_fair + (1 - p_fair) * pa * series),
        case4=median_threshold * (p_fair + (1 - p_fair) * series))


def coin_series_expectation(tolerance: float = 1e-14, max_terms: int = 10 ** 7) -> CoinExpectation:
    """Same expectations by truncated direct summation over the number of propagations P"""
    pa, pf = p_accept, p_fair
    rest = 1 - pa

    case3, case4 = [], []
    big_p = 3
    while True:
        geometric = rest ** (big_p - 3)
        # case 3: the slot holds 0.8, the additional particle is redrawn until acceptance
        case3.append(biased_weight / (big_p - 1) * geometric * pa)
        # case 4: the slot is redrawn; the accepted redraw is biased (weight 0.8) or
        # fair and lifted to 0.65
        case4.append(biased_weight / (big_p - 1) * geometric * 0.5)
        case4.append(median_threshold / (big_p - 1) * geometric * 0.5 * pf)
        if geometric * rest < tolerance:
            break
        big_p += 1
        if big_p > max_terms:
            raise ConvergenceFailure(f"Coin series did not converge in {max_terms} terms")

    return CoinExpectation(
        case1=biased_weight,
        case2=fair_weight,
        case3=pf * biased_weight + (1 - pf) * math.fsum(case3),
        case4=pf * median_threshold + (1 - pf) * math.fsum(case4))
