import math

import numpy as np
import pytest

from SecretaryLab.src.core import analysis, numeric
from SecretaryLab.src.core.errors import ParameterError
from SecretaryLab.src.models import AnalysisConfig, RewardHorizon, RuleParams


def test_expected_rank_float_examples():
    assert numeric.expected_rank_float(RuleParams(n=100, k=9, l=1)) == pytest.approx(
        9.595, abs=1e-9
    )
    assert numeric.expected_rank_float(RuleParams(n=3, k=1, l=1)) == pytest.approx(
        5 / 3, abs=1e-12
    )


def test_float_path_tracks_exact_values():
    for n in (2, 5, 17, 60):
        for k in range(1, n):
            for l in range(1, min(k, 6) + 1):
                params = RuleParams(n=n, k=k, l=l)
                assert numeric.expected_rank_float(params) == pytest.approx(
                    float(analysis.expected_rank(params)), rel=1e-10
                )
                for d in {1, 2, n // 2 or 1, n}:
                    horizon = RewardHorizon(d=d)
                    assert numeric.expected_reward_float(
                        params, horizon
                    ) == pytest.approx(
                        float(analysis.expected_reward(params, horizon)),
                        rel=1e-10,
                        abs=1e-12,
                    )


def test_float_path_on_random_grid_up_to_500():
    rng = np.random.default_rng(2024)
    for _ in range(200):
        n = int(rng.integers(2, 501))
        k = int(rng.integers(1, n))
        l = int(rng.integers(1, k + 1))
        d = int(rng.integers(1, n + 1))
        params = RuleParams(n=n, k=k, l=l)
        assert numeric.expected_rank_float(params) == pytest.approx(
            float(analysis.expected_rank(params)), rel=1e-10
        )
        horizon = RewardHorizon(d=d)
        assert numeric.expected_reward_float(params, horizon) == pytest.approx(
            float(analysis.expected_reward(params, horizon)), rel=1e-10, abs=1e-12
        )


def test_large_pool_stays_finite():
    params = RuleParams(n=10**6, k=367879, l=12)
    assert math.isfinite(numeric.expected_rank_float(params))
    value = numeric.expected_reward_float(params, RewardHorizon(d=1000))
    assert math.isfinite(value)
    assert 0 < value < 10**6 + 1


def test_log_factorials_table():
    table = numeric.log_factorials(10)
    assert table[0] == 0.0
    assert table[5] == pytest.approx(math.log(120))
    assert not table.flags.writeable


def test_resolve_method():
    config = AnalysisConfig(exact_max_n=50)
    assert numeric.resolve_method(50, "auto", config) == "exact"
    assert numeric.resolve_method(51, "auto", config) == "float"
    assert numeric.resolve_method(10**6, "exact", config) == "exact"
    assert numeric.resolve_method(3, "float", config) == "float"
    with pytest.raises(ParameterError):
        numeric.resolve_method(3, "fast")
