"""Two coins on a table, one fair and one biased. A coin is picked uniformly at random and
flipped once; the single observation is heads or tails.

The coin is picked by the transition f_1, so every propagation of a particle is a fresh
uniform pick. This makes each candidate of a rejection control sweep an independent coin,
which is what exposes the bias of dynamic thresholds."""

#  Copyright (c) 2026 smcrc developers. See LICENSE

from dataclasses import dataclass

import numpy as np

from .hmm import DiscreteHmm, HmmModel

FAIR, BIASED = 0, 1
HEADS, TAILS = 0, 1


@dataclass(frozen=True)
class CoinModel:
    fair_head_prob: float = 0.5
    biased_head_prob: float = 0.8

    def as_hmm(self) -> DiscreteHmm:
        pick = [0.5, 0.5]
        return DiscreteHmm(
            initial=np.array(pick),
            transition=np.array([pick, pick]),
            emission=np.array([
                [self.fair_head_prob, 1 - self.fair_head_prob],
                [self.biased_head_prob, 1 - self.biased_head_prob]]))

    def marginal(self, outcome: int) -> float:
        heads = 0.5 * self.fair_head_prob + 0.5 * self.biased_head_prob
        return heads if outcome == HEADS else 1 - heads


def coin_model(coin: CoinModel = CoinModel()) -> HmmModel:
    return HmmModel(coin.as_hmm(), horizon=1)


def parse_outcome(symbol) -> int:
    s = str(symbol).strip().upper()
    if s in ("H", str(HEADS)):
        return HEADS
    if s in ("T", str(TAILS)):
        return TAILS
    raise ValueError(f"Coin outcome must be H or T, got {symbol!r}")
