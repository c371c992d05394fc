"""Floating-point evaluation of the expected rank and reward for large pools.

Binomials are handled as log-factorial differences so nothing overflows at
n in the millions; sums run over numpy arrays in a fixed order, which keeps
results reproducible run to run.
"""

import math
from functools import lru_cache
from typing import Optional

import numpy as np

from ..models.config import AnalysisConfig
from ..models.params import RewardHorizon, RuleParams
from .errors import ParameterError

METHODS = ("auto", "exact", "float")


@lru_cache(maxsize=16)
def log_factorials(n: int) -> np.ndarray:
    """``lf[i] = ln(i!)`` for ``i = 0..n`` (read-only)."""
    table = np.fromiter(
        (math.lgamma(i + 1) for i in range(n + 1)), dtype=np.float64, count=n + 1
    )
    table.setflags(write=False)
    return table


def _log_binomial(lf: np.ndarray, a, b):
    return lf[a] - lf[b] - lf[a - b]


def expected_rank_float(params: RuleParams) -> float:
    n, k, l = params.n, params.k, params.l
    lf = log_factorials(n)
    # C(n-l, k-l) / C(n, k) = (n-l)! k! / (n! (k-l)!)
    ratio = math.exp(lf[n - l] + lf[k] - lf[n] - lf[k - l])
    return (n + 1) / 2 * (l / (k + 1) + ratio)


def expected_reward_float(params: RuleParams, horizon: RewardHorizon) -> float:
    n, k, l = params.n, params.k, params.l
    d = horizon.check_pool(n).d
    lf = log_factorials(n)
    log_total = _log_binomial(lf, n, k)

    t = np.arange(l + 1, n - k + l + 1)
    log_weight = (
        _log_binomial(lf, t - 1, l - 1)
        + _log_binomial(lf, n - t, k - l)
        - np.log(t - 1)
        - log_total
    )
    m = np.minimum(t - 1, d)
    payoff = m * (2 * n + 1 - m) / 2
    succeeded = float(np.sum(np.exp(log_weight) * payoff))

    tail = 0.0
    if d >= l + 1:
        fail = math.exp(_log_binomial(lf, n - l, k - l) - math.log(n - l) - log_total)
        tail = fail * ((d - l) * (n + 1) - (d * (d + 1) - l * (l + 1)) / 2)
    return succeeded + tail


def resolve_method(
    n: int, method: str = "auto", config: Optional[AnalysisConfig] = None
) -> str:
    """Map ``auto`` onto ``exact`` or ``float`` by pool size."""
    if method not in METHODS:
        raise ParameterError(f"method must be one of {', '.join(METHODS)}, got {method!r}")
    if method != "auto":
        return method
    config = config or AnalysisConfig()
    return "exact" if n <= config.exact_max_n else "float"
