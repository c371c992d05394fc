"""Optimal (k, l) searches, the closed-form minimisers and the reward constants.

Grid searches walk k ascending and, within each k, l ascending, and only
replace the incumbent on a strict improvement; that realises the tie-break
"smallest k, then smallest l" regardless of how values are computed.
"""

import math
from typing import Callable, Iterator, List, Optional, Tuple

import mpmath

from ..models.config import AnalysisConfig, OptimizerConfig
from ..models.params import RewardHorizon, RuleParams
from ..models.results import (
    AsymptoticEstimate,
    Objective,
    OptimizationResult,
    SearchDomain,
)
from ..utils.logger import get_logger, log_progress_json
from . import analysis, numeric
from .errors import ParameterError

logger = get_logger(__name__)


def default_l_max(n: int, config: Optional[OptimizerConfig] = None) -> int:
    """ceil(l_max_factor * ln n): the optimal l grows like ln n - 1."""
    config = config or OptimizerConfig()
    return max(1, math.ceil(config.l_max_factor * math.log(n)))


def _domain(
    n: int, l_max: Optional[int], config: Optional[OptimizerConfig]
) -> SearchDomain:
    if n < 2:
        raise ParameterError(f"n must be at least 2, got n={n}")
    cap = default_l_max(n, config) if l_max is None else l_max
    if cap < 1:
        raise ParameterError(f"l_max must be at least 1, got {cap}")
    return SearchDomain(k_min=1, k_max=n - 1, l_min=1, l_max=min(cap, n - 1))


def _grid(n: int, domain: SearchDomain) -> Iterator[RuleParams]:
    for k in range(domain.k_min, domain.k_max + 1):
        for l in range(domain.l_min, min(domain.l_max, k) + 1):
            yield RuleParams(n=n, k=k, l=l)


def _search(
    candidates: Iterator[RuleParams],
    evaluate: Callable[[RuleParams], object],
    better: Callable[[object, object], bool],
) -> Tuple[RuleParams, object, List[Tuple[int, int]]]:
    best, best_value, ties = None, None, []
    for params in candidates:
        value = evaluate(params)
        if best is None or better(value, best_value):
            best, best_value, ties = params, value, []
        elif value == best_value:
            ties.append((params.k, params.l))
    return best, best_value, ties


def optimize_rank(
    n: int,
    l_max: Optional[int] = None,
    method: str = "auto",
    analysis_config: Optional[AnalysisConfig] = None,
    optimizer_config: Optional[OptimizerConfig] = None,
) -> OptimizationResult:
    """Minimise the expected rank over 1 ≤ l ≤ min(l_max, k), l ≤ k ≤ n-1."""
    domain = _domain(n, l_max, optimizer_config)
    resolved = numeric.resolve_method(n, method, analysis_config)
    evaluate = (
        analysis.expected_rank if resolved == "exact" else numeric.expected_rank_float
    )
    best, value, ties = _search(_grid(n, domain), evaluate, lambda a, b: a < b)
    log_progress_json(
        logger, "optimize_rank", n=n, l_max=domain.l_max, method=resolved,
        k_star=best.k, l_star=best.l,
    )
    return OptimizationResult(
        n=n,
        objective=Objective.MIN_RANK,
        k_star=best.k,
        l_star=best.l,
        value=float(value),
        exact_value=value if resolved == "exact" else None,
        method=resolved,
        search_domain=domain,
        ties=ties,
    )


def optimize_reward(
    n: int,
    horizon: RewardHorizon,
    l_max: Optional[int] = None,
    method: str = "auto",
    analysis_config: Optional[AnalysisConfig] = None,
    optimizer_config: Optional[OptimizerConfig] = None,
) -> OptimizationResult:
    """Maximise the expected truncated reward over the grid of :func:`optimize_rank`.

    The float path screens the whole grid. When exact evaluation applies, every
    point within ``certify_rel_tol`` of the float optimum is re-evaluated
    exactly and the exact optimum is reported.
    """
    domain = _domain(n, l_max, optimizer_config)
    horizon.check_pool(n)
    analysis_config = analysis_config or AnalysisConfig()
    resolved = numeric.resolve_method(n, method, analysis_config)

    if resolved == "exact" and method == "exact":
        # exhaustive exact search, no float screening
        best, value, ties = _search(
            _grid(n, domain),
            lambda p: analysis.expected_reward(p, horizon),
            lambda a, b: a > b,
        )
        exact_value = value
    else:
        screened = [
            (p, numeric.expected_reward_float(p, horizon)) for p in _grid(n, domain)
        ]
        top = max(v for _, v in screened)
        if resolved == "exact":
            cutoff = top * (1 - analysis_config.certify_rel_tol)
            shortlist = [p for p, v in screened if v >= cutoff]
            best, value, ties = _search(
                iter(shortlist),
                lambda p: analysis.expected_reward(p, horizon),
                lambda a, b: a > b,
            )
            exact_value = value
        else:
            values = dict(screened)
            best, value, ties = _search(
                (p for p, _ in screened), values.__getitem__, lambda a, b: a > b
            )
            exact_value = None

    log_progress_json(
        logger, "optimize_reward", n=n, d=horizon.d, l_max=domain.l_max,
        method=resolved, k_star=best.k, l_star=best.l,
    )
    return OptimizationResult(
        n=n,
        objective=Objective.MAX_REWARD,
        d=horizon.d,
        k_star=best.k,
        l_star=best.l,
        value=float(value),
        exact_value=exact_value,
        method=resolved,
        search_domain=domain,
        ties=ties,
    )


def closed_k_l1(n: float) -> float:
    """Continuous minimiser in k of the expected rank with l = 1: sqrt(n) - 1."""
    if n < 2:
        raise ParameterError(f"n must be at least 2, got n={n}")
    return math.sqrt(n) - 1


def closed_k_l2(n: float) -> float:
    """Continuous minimiser in k of the expected rank with l = 2,
    the real root of (2k-1)(k+1)^2 = 2n(n-1).

    With ``m = (2n-1)^2`` and ``c = (sqrt(m^2 - 1) + m)^(1/3)`` the root is
    ``(c - 1 + 1/c) / 2``. Both cube roots come from the one radicand ``c``.
    """
    if n < 2:
        raise ParameterError(f"n must be at least 2, got n={n}")
    m = (2 * n - 1) ** 2
    c = (math.sqrt(m * m - 1) + m) ** (1 / 3)
    return (c - 1 + 1 / c) / 2


def asymptotics(n: float, l: Optional[float] = None) -> AsymptoticEstimate:
    """Large-n approximations: k ~ n^(l/(l+1)), E ~ (l+1)/2 * n^(1/(l+1)).

    Without ``l`` the minimising l = ln n - 1 is used, giving k ~ n/e and
    E ~ (e/2) ln n. Logarithms are natural throughout.
    """
    if l is None and n < 3:
        raise ParameterError(f"n must be at least 3 when l is unset, got n={n}")
    if l is not None and (l <= 0 or n <= 1):
        raise ParameterError(f"need n > 1 and l > 0, got n={n}, l={l}")
    l_approx = math.log(n) - 1
    chosen = l_approx if l is None else l
    return AsymptoticEstimate(
        n=n,
        l=l,
        k_approx=n ** (chosen / (chosen + 1)),
        l_approx=l_approx,
        value_approx=(chosen + 1) / 2 * n ** (1 / (chosen + 1)),
    )


def _bracketed_root(f: Callable, lo: str, hi: str) -> float:
    with mpmath.workdps(30):
        bracket = (mpmath.mpf(lo), mpmath.mpf(hi))
        root = mpmath.findroot(f, bracket, solver="bisect", maxsteps=200)
        return float(root)


def solve_c1() -> float:
    """Maximiser of -x ln x on (0, 1), i.e. the root of -ln x - 1 = 0 (1/e)."""
    return _bracketed_root(lambda x: -mpmath.log(x) - 1, "1e-12", "1")


def solve_c2() -> Tuple[float, float]:
    """Smaller root x of 2x - 2 ln x = 3 and the constant x(2 - x)."""
    x = _bracketed_root(lambda x: 2 * x - 2 * mpmath.log(x) - 3, "1e-12", "1")
    return x, x * (2 - x)


def limit_reward_fraction(d: int, x: float) -> float:
    """Large-n limit of reward/n for k = xn, l = 1 and d ∈ {1, 2}."""
    if not 0 < x < 1:
        raise ParameterError(f"x must lie in (0, 1), got {x}")
    if d == 1:
        return -x * math.log(x)
    if d == 2:
        return -2 * x * math.log(x) - x * (1 - x)
    raise ParameterError(f"limit forms exist only for d ∈ {{1, 2}}, got d={d}")


def estimate_cd(
    horizon: RewardHorizon,
    n: int,
    l_max: Optional[int] = None,
    optimizer_config: Optional[OptimizerConfig] = None,
) -> float:
    """Best reward over (k, l) divided by ``n``, a finite-n proxy for the limit constant.

    No extrapolation in n is applied; report ``n`` alongside the value.
    """
    result = optimize_reward(
        n, horizon, l_max=l_max, method="float", optimizer_config=optimizer_config
    )
    return result.value / n
