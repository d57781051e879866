#  Copyright (c) 2026 smcrc developers. See LICENSE

from .lgss import LgssParams, LgssModel, lgss_model, outlier_experiment_params
from .hmm import DiscreteHmm, HmmModel, hmm_model, random_hmm
from .coin import CoinModel, coin_model, FAIR, BIASED, HEADS, TAILS
from .datasets import write_dataset, read_dataset
