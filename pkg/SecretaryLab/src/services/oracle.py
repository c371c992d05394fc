"""Brute-force ground truth: run the rule on every one of the n! permutations."""

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Iterator, List, Optional, Tuple

from ..core.errors import OracleCapError
from ..core.strategy import apply_rule, reward
from ..core.types import SelectionOutcome
from ..models.config import OracleConfig
from ..models.params import RewardHorizon, RuleParams
from ..models.results import OracleReport
from ..utils.logger import get_logger, log_progress_json

logger = get_logger(__name__)

# (selected rank counts, unsuccessful counts by rank, successful counts by test value)
Tally = Tuple[Counter, Counter, Counter]


def check_cap(n: int, config: OracleConfig) -> None:
    if n > config.max_n:
        raise OracleCapError(
            f"exhaustive enumeration is capped at n ≤ {config.max_n} "
            f"({config.max_n}! permutations), got n={n}"
        )


def _prefixed_permutations(n: int, first: int) -> Iterator[Tuple[int, ...]]:
    """Permutations of 1..n starting with ``first``, in lexicographic order."""
    rest = [v for v in range(1, n + 1) if v != first]
    for tail in permutations(rest):
        yield (first,) + tail


def enumerate_outcomes(
    params: RuleParams,
) -> Iterator[Tuple[Tuple[int, ...], SelectionOutcome]]:
    """Every permutation in lexicographic order with its rule outcome."""
    n, k, l = params.n, params.k, params.l
    for perm in permutations(range(1, n + 1)):
        yield perm, apply_rule(n, k, l, perm)


def _tally_prefix(n: int, k: int, l: int, first: int) -> Tally:
    selected, failed, by_test = Counter(), Counter(), Counter()
    for perm in _prefixed_permutations(n, first):
        outcome = apply_rule(n, k, l, perm)
        selected[outcome.s] += 1
        if outcome.success:
            by_test[outcome.t] += 1
        else:
            failed[outcome.s] += 1
    return selected, failed, by_test


def _merge(tallies: List[Tally]) -> Tally:
    selected, failed, by_test = Counter(), Counter(), Counter()
    for part in tallies:
        selected.update(part[0])
        failed.update(part[1])
        by_test.update(part[2])
    return selected, failed, by_test


def enumerate_rule(
    params: RuleParams, config: Optional[OracleConfig] = None
) -> OracleReport:
    """Tally the selected rank over all n! permutations and compute exact means.

    Work is split by the first element of the permutation; with more than one
    worker the prefixes run in separate processes. Counters merge by addition,
    so the report does not depend on the worker count.
    """
    config = config or OracleConfig()
    n, k, l = params.n, params.k, params.l
    check_cap(n, config)

    prefixes = range(1, n + 1)
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            parts = list(
                pool.map(_tally_prefix, [n] * n, [k] * n, [l] * n, prefixes)
            )
    else:
        parts = [_tally_prefix(n, k, l, first) for first in prefixes]
    selected, failed, by_test = _merge(parts)

    total = factorial(n)
    mean_rank = Fraction(sum(s * c for s, c in selected.items()), total)
    mean_reward = {}
    for d in range(1, n + 1):
        horizon = RewardHorizon(d=d)
        earned = sum(reward(horizon, n, s) * c for s, c in selected.items())
        mean_reward[d] = Fraction(earned, total)
    log_progress_json(logger, "oracle", n=n, k=k, l=l, total=total)
    return OracleReport(
        n=n,
        k=k,
        l=l,
        outcome_counts=dict(sorted(selected.items())),
        failure_counts=dict(sorted(failed.items())),
        success_counts_by_test=dict(sorted(by_test.items())),
        total=total,
        mean_rank=mean_rank,
        mean_reward=mean_reward,
    )


def count_two_cycle_arrangements(n: int, config: Optional[OracleConfig] = None) -> int:
    """Count permutations of 1..n with exactly two cycles by direct enumeration."""
    config = config or OracleConfig()
    check_cap(n, config)
    count = 0
    for perm in permutations(range(n)):
        seen = [False] * n
        cycles = 0
        for start in range(n):
            if seen[start]:
                continue
            cycles += 1
            node = start
            while not seen[node]:
                seen[node] = True
                node = perm[node]
        if cycles == 2:
            count += 1
    return count
