"""One-parameter sweeps of the expected rank or reward, exported as CSV."""

from typing import IO, List, Optional, Union

import pandas as pd

from ..core import analysis, numeric
from ..core.errors import ParameterError
from ..models.config import AnalysisConfig
from ..models.params import RewardHorizon, RuleParams
from ..models.results import Objective, SweepRow
from ..utils.logger import get_logger, log_progress_json

logger = get_logger(__name__)

CSV_COLUMNS = ["n", "k", "l", "d", "value"]


def _evaluate(params: RuleParams, horizon: Optional[RewardHorizon], method: str) -> float:
    if horizon is None:
        if method == "exact":
            return float(analysis.expected_rank(params))
        return numeric.expected_rank_float(params)
    if method == "exact":
        return float(analysis.expected_reward(params, horizon))
    return numeric.expected_reward_float(params, horizon)


def sweep(
    n: int,
    vary: str,
    k: Optional[int] = None,
    l: Optional[int] = None,
    start: Optional[int] = None,
    stop: Optional[int] = None,
    horizon: Optional[RewardHorizon] = None,
    method: str = "auto",
    config: Optional[AnalysisConfig] = None,
) -> List[SweepRow]:
    """Evaluate the rule while one of ``k``/``l`` runs over an inclusive range.

    With ``vary="k"`` the fixed ``l`` is required and ``k`` defaults to
    ``l..n-1``; with ``vary="l"`` the fixed ``k`` is required and ``l`` defaults
    to ``1..k``. Rows come out ordered by (k, l).
    """
    if vary == "k":
        if l is None:
            raise ParameterError("sweeping k needs a fixed l")
        lo, hi = (l if start is None else start), (n - 1 if stop is None else stop)
        grid = [(value, l) for value in range(lo, hi + 1)]
    elif vary == "l":
        if k is None:
            raise ParameterError("sweeping l needs a fixed k")
        lo, hi = (1 if start is None else start), (k if stop is None else stop)
        grid = [(k, value) for value in range(lo, hi + 1)]
    else:
        raise ParameterError(f"vary must be 'k' or 'l', got {vary!r}")
    if not grid:
        raise ParameterError(f"empty sweep range {lo}..{hi}")

    if horizon is not None:
        horizon.check_pool(n)
    resolved = numeric.resolve_method(n, method, config)
    objective = Objective.MIN_RANK if horizon is None else Objective.MAX_REWARD

    rows = []
    for gk, gl in grid:
        params = RuleParams(n=n, k=gk, l=gl)
        rows.append(
            SweepRow(
                n=n,
                k=gk,
                l=gl,
                d=None if horizon is None else horizon.d,
                value=repr(_evaluate(params, horizon, resolved)),
                objective=objective,
            )
        )
    log_progress_json(logger, "sweep", n=n, vary=vary, rows=len(rows), method=resolved)
    return rows


def rows_to_frame(rows: List[SweepRow]) -> pd.DataFrame:
    frame = pd.DataFrame(
        [row.model_dump(include=set(CSV_COLUMNS)) for row in rows], columns=CSV_COLUMNS
    )
    frame["d"] = pd.array(frame["d"].tolist(), dtype="Int64")
    return frame


def write_csv(rows: List[SweepRow], target: Union[str, IO[str]]) -> None:
    rows_to_frame(rows).to_csv(target, index=False)
