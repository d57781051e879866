#  Copyright (c) 2026 smcrc developers. See LICENSE

import numpy as np
import pytest

from smcrc.oracles import negbin_series, negbin_pmf, expected_propagations


def test_series_identity():
    for n in (1, 2, 5, 10, 50, 200):
        for p in (0.02, 0.1, 0.3, 0.5, 0.9, 0.999, 1.0):
            assert abs(negbin_series(n, p, 1e-12) - p / n) < 1e-9, (n, p)


def test_pmf():
    n, p = 4, 0.3
    d = np.arange(n + 1, 2000)
    pmf = negbin_pmf(d, n, p)
    assert pmf.sum() == pytest.approx(1.0, abs=1e-12)
    assert np.sum(d * pmf) == pytest.approx(expected_propagations(n, p), rel=1e-10)
    assert negbin_pmf(n + 1, n, p) == pytest.approx(p ** (n + 1))
    assert negbin_pmf(n, n, p) == 0.0


def test_bad_arguments():
    for n, p in ((0, 0.5), (3, 0.0), (3, 1.5)):
        with pytest.raises(ValueError):
            negbin_series(n, p)
    with pytest.raises(ValueError):
        negbin_series(3, 0.5, tolerance=0.0)
