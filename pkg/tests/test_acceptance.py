#  Copyright (c) 2026 smcrc developers. See LICENSE

import math

import numpy as np
import pytest

from smcrc.core.errors import InvalidThreshold, InvalidWeight, InvalidCount
from smcrc.core.randomstream import RandomStream
from smcrc.filters import accept_step, step_factor_pfrc
from smcrc.filters.acceptance import (
    log_acceptance_probability, acceptance_probability, rejection_control, alive, accept_all,
    log_mean_weight)


def test_lifting_identity():
    """max(w, c) * min(1, w/c) = w over 600 orders of magnitude, in the log domain"""
    rng = np.random.default_rng(2019)
    span = 300 * math.log(10)
    log_w = rng.uniform(-span, span, 100000)
    log_c = rng.uniform(-span, span, 100000)

    lifted = np.maximum(log_w, log_c)
    restored = lifted + log_acceptance_probability(log_w, log_c)
    # one rounding in the difference, one in the sum
    tolerance = 2 * np.spacing(np.maximum(np.abs(log_w), np.abs(log_c)))
    assert np.all(np.abs(restored - log_w) <= tolerance)


def test_acceptance_probability():
    p = acceptance_probability(np.log([0.25, 1.0, 4.0]), math.log(1.0))
    assert p.tolist() == [0.25, 1.0, 1.0]
    assert acceptance_probability(np.array([-np.inf]), 0.0)[0] == 0.0


def test_accept_step_above_threshold():
    rng = RandomStream(1)
    for _ in range(50):
        d = accept_step(2.0, 1.0, rng)
        assert d.accepted and d.lifted_weight == 2.0


def test_accept_step_zero_weight():
    rng = RandomStream(2)
    for _ in range(50):
        d = accept_step(0.0, 1e-300, rng)
        assert not d.accepted and d.lifted_weight is None


def test_accept_step_rate():
    rng = RandomStream(3)
    draws = 20000
    decisions = [accept_step(0.3, 1.0, rng) for _ in range(draws)]
    rate = np.mean([d.accepted for d in decisions])
    assert abs(rate - 0.3) <= 4 * math.sqrt(0.3 * 0.7 / draws)
    assert all(d.lifted_weight == 1.0 for d in decisions if d.accepted)


def test_accept_step_errors():
    rng = RandomStream(4)
    for c in (0.0, -1.0, math.inf, math.nan):
        with pytest.raises(InvalidThreshold):
            accept_step(0.5, c, rng)
    for w in (-0.5, math.inf, math.nan):
        with pytest.raises(InvalidWeight):
            accept_step(w, 1.0, rng)


def test_policies():
    log_w = np.array([-np.inf, math.log(0.5), 0.0])
    u = np.array([0.0, 0.9, 0.9])

    accepted, lifted = rejection_control(log_w, math.log(0.6), u)
    assert accepted.tolist() == [False, False, True]
    assert lifted[2] == 0.0

    accepted, lifted = alive(log_w, None, u)
    assert accepted.tolist() == [False, True, True]
    assert np.array_equal(lifted, log_w)

    accepted, lifted = accept_all(log_w, None, u)
    assert accepted.all()


def test_log_mean_weight():
    assert log_mean_weight(np.log([1.0, 3.0]), 2) == pytest.approx(math.log(2.0))
    assert log_mean_weight(np.array([-1000.0, -1000.0]), 2) == pytest.approx(-1000.0)
    assert log_mean_weight(np.array([-np.inf, -np.inf]), 1) == -np.inf


def test_step_factor():
    assert step_factor_pfrc(3.0, 4) == 1.0
    assert step_factor_pfrc(0.0, 2) == 0.0
    with pytest.raises(InvalidCount):
        step_factor_pfrc(1.0, 1)
