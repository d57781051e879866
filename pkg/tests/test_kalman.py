#  Copyright (c) 2026 smcrc developers. See LICENSE

from types import SimpleNamespace

import numpy as np
import pytest
from scipy.integrate import dblquad
from scipy.stats import norm, multivariate_normal

from smcrc.core.errors import NonPositiveVariance
from smcrc.core.model import simulate
from smcrc.core.randomstream import RandomStream
from smcrc.models import LgssModel, LgssParams
from smcrc.oracles import kalman_loglik, kalman_states

from lib import small_lgss


def _joint_loglik(p: LgssParams, y):
    """log density of y_{1:T} as one multivariate normal"""
    horizon = len(y)
    var_x = [p.v0]
    for _ in range(horizon):
        var_x.append(p.a ** 2 * var_x[-1] + p.q)
    cov = np.empty((horizon, horizon))
    for s in range(1, horizon + 1):
        for t in range(s, horizon + 1):
            cov[s - 1, t - 1] = cov[t - 1, s - 1] = p.a ** (t - s) * var_x[s]
    cov += p.r * np.eye(horizon)
    mean = [p.a ** t * p.m0 for t in range(1, horizon + 1)]
    return multivariate_normal(mean=mean, cov=cov).logpdf(y)


def test_single_step():
    p = LgssParams(a=0.8, q=0.25, r=0.1, m0=0.3, v0=0.25)
    assert kalman_loglik(p, [1.2]) == pytest.approx(
        norm.logpdf(1.2, loc=0.8 * 0.3, scale=np.sqrt(0.64 * 0.25 + 0.25 + 0.1)))


def test_matches_joint_gaussian():
    for i, p in enumerate([small_lgss, LgssParams(a=-0.5, q=1.0, r=0.3, m0=1.0, v0=2.0),
                           LgssParams(a=1.0, q=0.0, r=0.5, m0=0.0, v0=0.0)]):
        y = simulate(LgssModel(p, horizon=8), RandomStream(i)).observations
        assert kalman_loglik(p, y) == pytest.approx(_joint_loglik(p, y), rel=1e-10)


def test_states():
    y = [0.1, -0.4, 0.7]
    states = list(kalman_states(small_lgss, y))
    assert len(states) == 3
    assert states[-1].loglik == kalman_loglik(small_lgss, y)
    assert all(s.variance > small_lgss.r for s in states)
    assert kalman_loglik(small_lgss, []) == 0.0


def test_non_positive_variance():
    p = SimpleNamespace(a=0.8, q=0.25, r=0.0, m0=0.0, v0=0.25)
    with pytest.raises(NonPositiveVariance):
        kalman_loglik(p, [0.1])


def test_quadrature_two_steps():
    p = LgssParams(a=0.8, q=0.25, r=0.1, m0=0.2, v0=0.25)
    y1, y2 = 0.4, -0.3
    sd1 = np.sqrt(p.a ** 2 * p.v0 + p.q)

    def integrand(x2, x1):
        return (norm.pdf(x1, p.a * p.m0, sd1) * norm.pdf(y1, x1, np.sqrt(p.r))
                * norm.pdf(x2, p.a * x1, np.sqrt(p.q)) * norm.pdf(y2, x2, np.sqrt(p.r)))

    z, _ = dblquad(integrand, -8, 8, -8, 8, epsabs=1e-13, epsrel=1e-10)
    assert kalman_loglik(p, [y1, y2]) == pytest.approx(np.log(z), abs=1e-6)
