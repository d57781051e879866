#  Copyright (c) 2026 smcrc developers. See LICENSE

import math

import numpy as np

from smcrc.core.model import simulate
from smcrc.core.randomstream import RandomStream
from smcrc.filters import run_alive, run_pfrc
from smcrc.models import HmmModel, random_hmm
from smcrc.oracles import forward_loglik
from smcrc.thresholds import Constant

from lib import blocking_hmm, replicate_log_z, within_se


def _test_set():
    yield blocking_hmm(), np.array([1, 1, 0, 1])
    for i in range(5):
        hmm = random_hmm(2 + i % 3, 2, RandomStream(50 + i))
        yield hmm, simulate(HmmModel(hmm, horizon=4), RandomStream(60 + i)).observations


def test_alive_is_the_small_threshold_limit():
    # c is below every positive weight, so rejection control accepts exactly what the alive
    # filter accepts and lifts nothing
    for i, (hmm, y) in enumerate(_test_set()):
        model = HmmModel(hmm, horizon=len(y))
        for m in range(20):
            rc = run_pfrc(model, y, 6, Constant(1e-300), RandomStream(i, stream_id=m))
            alive = run_alive(model, y, 6, RandomStream(i, stream_id=m))
            assert rc.same_estimates(alive)


def test_alive_result():
    hmm, y = next(_test_set())
    result = run_alive(HmmModel(hmm, horizon=len(y)), y, 6, RandomStream(1))
    assert result.filter_name == "alive"
    assert result.thresholds is None
    assert not result.biased
    assert np.all(result.final_particles.log_weights > -np.inf)


def test_alive_unbiased():
    hmm, y = next(_test_set())
    model = HmmModel(hmm, horizon=len(y))
    log_z = replicate_log_z(lambda rng: run_alive(model, y, 6, rng), 3000, seed=2)
    assert within_se(log_z, math.exp(forward_loglik(hmm, y)))
