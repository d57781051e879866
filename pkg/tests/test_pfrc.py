#  Copyright (c) 2026 smcrc developers. See LICENSE

import math

import numpy as np
import pytest

from smcrc.core.errors import PropagationBudgetExceeded
from smcrc.core.model import simulate
from smcrc.core.randomstream import RandomStream
from smcrc.filters import run_bpf, run_pfrc
from smcrc.models import LgssModel, HmmModel, coin_model, random_hmm, HEADS
from smcrc.oracles import kalman_loglik, forward_loglik, negbin_pmf, expected_propagations
from smcrc.thresholds import Constant, PerStep, DynamicQuantile, ACCEPT_ALL

from lib import ConstantWeightModel, small_lgss, replicate_log_z, within_se


def test_no_rejections_matches_bpf():
    k, n, horizon = 0.37, 10, 6
    model = ConstantWeightModel(k, horizon=horizon)
    y = np.zeros(horizon)

    rc = run_pfrc(model, y, n, Constant(0.1), RandomStream(1))
    bpf = run_bpf(model, y, n, RandomStream(1))

    assert rc.log_z_hat == bpf.log_z_hat
    assert rc.log_z_hat == pytest.approx(horizon * math.log(k), abs=1e-12)
    assert rc.propagations.tolist() == [n + 1] * horizon
    assert rc.total_propagations == (n + 1) * horizon
    assert rc.thresholds == (0.1,) * horizon
    assert not rc.biased


def test_accept_all_schedule():
    model = ConstantWeightModel(0.5, horizon=3)
    result = run_pfrc(model, np.zeros(3), 4, PerStep((ACCEPT_ALL, 0.1, ACCEPT_ALL)), RandomStream(2))
    assert result.propagations.tolist() == [5, 5, 5]
    assert result.thresholds == (ACCEPT_ALL, 0.1, ACCEPT_ALL)
    assert result.log_z_hat == pytest.approx(3 * math.log(0.5), abs=1e-12)


def test_weights_lifted_to_threshold():
    model = LgssModel(small_lgss, horizon=8)
    y = simulate(model, RandomStream(3)).observations
    c = 0.4
    result = run_pfrc(model, y, 32, Constant(c), RandomStream(4))
    assert np.all(result.final_particles.log_weights >= math.log(c))
    assert np.all(result.propagations >= 33)
    assert result.total_propagations == result.propagations.sum()


def test_reproducible():
    model = LgssModel(small_lgss, horizon=8)
    y = simulate(model, RandomStream(3)).observations
    a = run_pfrc(model, y, 16, Constant(0.4), RandomStream(5))
    b = run_pfrc(model, y, 16, Constant(0.4), RandomStream(5))
    assert a.same_estimates(b)


def test_unbiased_lgss():
    model = LgssModel(small_lgss, horizon=5)
    y = simulate(model, RandomStream(6)).observations
    log_z = replicate_log_z(lambda rng: run_pfrc(model, y, 16, Constant(0.3), rng), 2000, seed=7)
    assert within_se(log_z, math.exp(kalman_loglik(small_lgss, y)))


def test_unbiased_coin():
    log_z = replicate_log_z(
        lambda rng: run_pfrc(coin_model(), np.array([HEADS]), 1, Constant(0.65), rng), 20000, seed=8)
    assert within_se(log_z, 0.65)


def test_discrete_oracle():
    # 20 random HMMs, K = 2..4 states, T = 1..6 steps
    for i in range(20):
        k, horizon, symbols = 2 + i % 3, 1 + i % 6, 2 + i % 2
        hmm = random_hmm(k, symbols, RandomStream(100 + i))
        model = HmmModel(hmm, horizon=horizon)
        y = simulate(model, RandomStream(200 + i)).observations
        exact = math.exp(forward_loglik(hmm, y))

        bpf = replicate_log_z(lambda rng: run_bpf(model, y, 8, rng), 1000, seed=300 + i)
        pfrc = replicate_log_z(
            lambda rng: run_pfrc(model, y, 8, Constant(0.3), rng, 10 ** 6), 1000, seed=400 + i)
        assert within_se(bpf, exact), i
        assert within_se(pfrc, exact), i


def test_propagation_count_law():
    # on the coin with c = 0.8 a candidate is accepted with probability 0.5 + 0.5 * 0.5/0.8
    p, n, runs = 0.8125, 3, 20000
    counts = np.array([
        run_pfrc(coin_model(), np.array([HEADS]), n, Constant(0.8), RandomStream(9, stream_id=m)).total_propagations
        for m in range(runs)])

    mean = expected_propagations(n, p)
    assert abs(counts.mean() - mean) <= 4 * counts.std(ddof=1) / math.sqrt(runs)

    q = float(negbin_pmf(n + 1, n, p))
    assert q == pytest.approx(p ** (n + 1))
    assert abs(np.mean(counts == n + 1) - q) <= 4 * math.sqrt(q * (1 - q) / runs)


def test_dynamic_schedule_is_flagged():
    model = LgssModel(small_lgss, horizon=4)
    y = simulate(model, RandomStream(10)).observations
    result = run_pfrc(model, y, 8, DynamicQuantile(0.2), RandomStream(11))
    assert result.biased
    assert len(result.thresholds) == 4


def test_budget():
    model = ConstantWeightModel(0.5, horizon=2)
    with pytest.raises(PropagationBudgetExceeded) as e:
        run_pfrc(model, np.zeros(2), 4, Constant(1e6), RandomStream(12), max_propagations_per_step=100)
    assert e.value.t == 1
    assert e.value.budget == 100

    with pytest.raises(ValueError):
        run_pfrc(model, np.zeros(2), 4, Constant(0.1), RandomStream(12), max_propagations_per_step=5)
