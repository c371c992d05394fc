"""Exact closed-form analysis of the (k, l) threshold rule.

Conventions: ``t`` is the test value (the l-th smallest rank among the first
k arrivals), ``s`` the selected rank. A search is successful when some later
arrival beats ``t``; it is unsuccessful exactly when ranks 1..l all sit among
the first k arrivals, in which case the last arrival is taken.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm

from ..models.params import RewardHorizon, RuleParams
from .combinatorics import binomial, harmonic_diff
from .errors import ParameterError
from .types import RankDistribution


def _check_test_value(params: RuleParams, t: int) -> None:
    n, k, l = params.n, params.k, params.l
    if not l + 1 <= t <= n - k + l:
        raise ParameterError(
            f"t must satisfy l+1 ≤ t ≤ n-k+l ({l + 1}..{n - k + l}), got t={t}"
        )


def p_success(params: RuleParams, t: int, s: int) -> Fraction:
    """Probability that the search succeeds with test value ``t`` and selects ``s``.

    C(t-1, l-1) C(n-t, k-l) / ((t-1) C(n, k)), the same for every ``s < t``.
    """
    _check_test_value(params, t)
    if not 1 <= s <= t - 1:
        raise ParameterError(f"s must satisfy 1 ≤ s ≤ t-1, got s={s}, t={t}")
    n, k, l = params.n, params.k, params.l
    return Fraction(
        binomial(t - 1, l - 1) * binomial(n - t, k - l), (t - 1) * binomial(n, k)
    )


def p_fail(params: RuleParams, s: int) -> Fraction:
    """Probability that the search fails and the last arrival has rank ``s``.

    Uniform over ``l+1 ≤ s ≤ n``: C(n-l, k-l) / ((n-l) C(n, k)).
    """
    n, k, l = params.n, params.k, params.l
    if not l + 1 <= s <= n:
        raise ParameterError(f"s must satisfy l+1 ≤ s ≤ n, got s={s}")
    return Fraction(binomial(n - l, k - l), (n - l) * binomial(n, k))


def success_probability(params: RuleParams) -> Fraction:
    """Probability that some arrival after the first k beats the test value."""
    n, k, l = params.n, params.k, params.l
    return 1 - Fraction(binomial(n - l, k - l), binomial(n, k))


def sequence_count(params: RuleParams, t: int, j: int) -> int:
    """Permutations with test value ``t``, offset ``j`` and one fixed successful ``s``.

    Zero when ``(t, j)`` cannot occur in a successful search.
    """
    n, k, l = params.n, params.k, params.l
    if not (l + 1 <= t <= n - k + l and 1 <= j <= n - k + l - t + 1):
        return 0
    return (
        binomial(t - 2, l - 1)
        * binomial(n - t, k - l)
        * binomial(n - k + l - t, j - 1)
        * factorial(k)
        * factorial(j - 1)
        * factorial(n - k - j)
    )


def rank_distribution(params: RuleParams) -> RankDistribution:
    """Exact distribution of the selected rank."""
    n, k, l = params.n, params.k, params.l
    t_max = n - k + l
    weights = {t: p_success(params, t, 1) for t in range(l + 1, t_max + 1)}
    fail = p_fail(params, n)

    probabilities = {}
    tail = Fraction(0)  # sum of weights for test values above s
    for s in range(n, 0, -1):
        if s + 1 in weights:
            tail += weights[s + 1]
        probabilities[s] = tail + (fail if s >= l + 1 else 0)
    return RankDistribution(n=n, probabilities=dict(sorted(probabilities.items())))


def expected_rank(params: RuleParams) -> Fraction:
    """Expected selected rank, (n+1)/2 * (l/(k+1) + C(n-l, k-l)/C(n, k))."""
    n, k, l = params.n, params.k, params.l
    return Fraction(n + 1, 2) * (
        Fraction(l, k + 1) + Fraction(binomial(n - l, k - l), binomial(n, k))
    )


@lru_cache(maxsize=1024)
def _lcm_range(lo: int, hi: int) -> int:
    """lcm(lo, ..., hi), 1 for an empty range."""
    return lcm(*range(lo, hi + 1)) if lo <= hi else 1


def _reward_tail(n: int, l: int, d: int, fail: Fraction) -> Fraction:
    """Unsuccessful searches paying off: fail * sum of (n+1-s) over s = l+1..d."""
    if d < l + 1:
        return Fraction(0)
    payoff = (d - l) * (n + 1) - (d * (d + 1) - l * (l + 1)) // 2
    return fail * payoff


def expected_reward(params: RuleParams, horizon: RewardHorizon) -> Fraction:
    """Exact expected truncated reward for horizon ``d``.

    The success probability does not depend on ``s``, so for each test value
    the payoff sum over ``s ≤ min(t-1, d)`` collapses to ``m (2n+1-m)/2`` with
    ``m = min(t-1, d)``. The remaining sum over ``t`` runs in integers:
    for l ≥ 2 through C(t-1, l-1)/(t-1) = C(t-2, l-2)/(l-1), for l = 1 over a
    common denominator of the 1/(t-1) factors.
    """
    n, k, l = params.n, params.k, params.l
    d = horizon.check_pool(n).d
    t_max = n - k + l
    total_ways = binomial(n, k)

    if l >= 2:
        numerator = 0
        for t in range(l + 1, t_max + 1):
            m = min(t - 1, d)
            numerator += (
                binomial(t - 2, l - 2) * binomial(n - t, k - l) * m * (2 * n + 1 - m)
            )
        succeeded = Fraction(numerator, 2 * (l - 1) * total_ways)
    else:
        # t - 1 ≤ d: the (t-1) factor cancels against m = t-1
        whole = sum(
            binomial(n - t, k - 1) * (2 * n + 2 - t)
            for t in range(2, min(d + 1, t_max) + 1)
        )
        # t - 1 > d: constant payoff d(2n+1-d)/2 over 1/(t-1)
        denom = _lcm_range(d + 1, t_max - 1)
        scaled = sum(
            binomial(n - t, k - 1) * (denom // (t - 1))
            for t in range(d + 2, t_max + 1)
        )
        succeeded = Fraction(whole, 2 * total_ways) + Fraction(
            scaled * d * (2 * n + 1 - d), 2 * denom * total_ways
        )

    fail = Fraction(binomial(n - l, k - l), (n - l) * total_ways)
    return succeeded + _reward_tail(n, l, d, fail)


def expected_reward_closed(params: RuleParams, d: int) -> Fraction:
    """Closed forms of the expected reward for d = 1 and d = 2."""
    if d not in (1, 2):
        raise ParameterError(f"closed forms exist only for d ∈ {{1, 2}}, got d={d}")
    n, k, l = params.n, params.k, params.l
    if l == 1:
        harmonic = k * harmonic_diff(n, k)
        if d == 1:
            return harmonic
        return Fraction(2 * n - 1, n) * harmonic - Fraction(k * (n - k - 1), n)
    gap = Fraction(k, n) - Fraction(binomial(n - l, k - l), binomial(n, k))
    scale = n if d == 1 else 2 * n - 1
    return Fraction(scale, l - 1) * gap


def complement_check(params: RuleParams) -> bool:
    """Reward with d = n plus the expected rank equals n + 1."""
    total = expected_reward(params, RewardHorizon(d=params.n)) + expected_rank(params)
    return total == params.n + 1


def check_d1_l1_dominance(n: int, k: int, l: int) -> bool:
    """For l ≥ 2 the d = 1 reward of (k, l) is at most k(n-k)/(n-1), which is at most
    the d = 1 reward of (k, 1)."""
    if l < 2:
        raise ParameterError(f"dominance is stated for l ≥ 2, got l={l}")
    bound = Fraction(k * (n - k), n - 1)
    upper = expected_reward_closed(RuleParams(n=n, k=k, l=l), 1)
    lower = expected_reward_closed(RuleParams(n=n, k=k, l=1), 1)
    return upper <= bound <= lower
