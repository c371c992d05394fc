from fractions import Fraction
from typing import List, Optional

from tqdm import tqdm

from ..core import analysis
from ..models.config import OracleConfig
from ..models.params import RewardHorizon, RuleParams
from ..models.results import Discrepancy, OracleReport
from ..services import oracle
from ..utils.logger import get_logger, log_progress_json

logger = get_logger(__name__)


def _rule_grid(n_max: int):
    for n in range(2, n_max + 1):
        for k in range(1, n):
            for l in range(1, k + 1):
                yield RuleParams(n=n, k=k, l=l)


def _compare(
    found: List[Discrepancy],
    params: RuleParams,
    quantity: str,
    expected: Fraction,
    observed: Fraction,
    **where: Optional[int],
) -> None:
    if expected != observed:
        found.append(
            Discrepancy(
                n=params.n,
                k=params.k,
                l=params.l,
                quantity=quantity,
                expected=expected,
                observed=observed,
                **where,
            )
        )


def check_report(report: OracleReport, params: RuleParams) -> List[Discrepancy]:
    """Compare one oracle report with every formula that covers it."""
    found: List[Discrepancy] = []
    n, k, l = params.n, params.k, params.l
    total = report.total

    _compare(found, params, "mean_rank", analysis.expected_rank(params), report.mean_rank)

    for t in range(l + 1, n - k + l + 1):
        # each of the t-1 admissible s carries the same probability
        expected = (t - 1) * analysis.p_success(params, t, 1)
        observed = Fraction(report.success_counts_by_test.get(t, 0), total)
        _compare(found, params, "success_mass", expected, observed, t=t)

    for s in range(l + 1, n + 1):
        observed = Fraction(report.failure_counts.get(s, 0), total)
        _compare(found, params, "failure_mass", analysis.p_fail(params, s), observed, s=s)

    distribution = analysis.rank_distribution(params)
    for s in range(1, n + 1):
        observed = Fraction(report.outcome_counts.get(s, 0), total)
        _compare(found, params, "rank_probability", distribution[s], observed, s=s)

    for d in range(1, n + 1):
        observed = report.mean_reward[d]
        expected = analysis.expected_reward(params, RewardHorizon(d=d))
        _compare(found, params, "mean_reward", expected, observed, d=d)
        if d <= 2:
            closed = analysis.expected_reward_closed(params, d)
            _compare(found, params, "closed_reward", closed, observed, d=d)
    return found


def verify_formulas(
    n_max: int, config: Optional[OracleConfig] = None
) -> List[Discrepancy]:
    """Check every formula against exhaustive enumeration for all n ≤ n_max.

    Returns an empty list when everything agrees exactly; mismatches are data,
    not errors.
    """
    config = config or OracleConfig()
    oracle.check_cap(n_max, config)
    grid = list(_rule_grid(n_max))
    found: List[Discrepancy] = []
    for params in tqdm(grid, desc="oracle", disable=not config.show_progress):
        report = oracle.enumerate_rule(params, config)
        found.extend(check_report(report, params))
    log_progress_json(
        logger, "verify_formulas", n_max=n_max, rules=len(grid), discrepancies=len(found)
    )
    return found
