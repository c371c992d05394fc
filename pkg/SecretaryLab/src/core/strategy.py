import heapq
from typing import Sequence, Tuple, Union

import numpy as np

from ..models.params import RewardHorizon, RuleParams
from .errors import ParameterError
from .types import Permutation, SelectionOutcome


def apply_rule(n: int, k: int, l: int, values: Sequence[int]) -> SelectionOutcome:
    """Run the rule on ``values`` without validating inputs.

    Used by the enumeration hot loop; callers guarantee a valid permutation.
    """
    t = heapq.nsmallest(l, values[:k])[-1]
    for i in range(k, n):
        if values[i] < t:
            return SelectionOutcome(t=t, j=i - k + 1, s=values[i], success=True)
    return SelectionOutcome(t=t, j=n - k, s=values[n - 1], success=False)


def run_rule(
    params: RuleParams, perm: Union[Permutation, Sequence[int]]
) -> SelectionOutcome:
    """Select a candidate from ``perm`` with the stopping rule ``params``.

    The test value ``t`` is the ``l``-th smallest of the first ``k`` ranks; the
    first later rank below ``t`` is selected, otherwise the last one.
    """
    perm = Permutation.of(perm)
    if len(perm) != params.n:
        raise ParameterError(
            f"permutation has length {len(perm)} but the rule expects n={params.n}"
        )
    return apply_rule(params.n, params.k, params.l, perm.values)


def run_rule_batch(
    k: int, l: int, perms: np.ndarray
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Vectorised :func:`run_rule` over the rows of ``perms``.

    Returns ``(t, j, s, success)`` arrays with one entry per row.
    """
    if perms.ndim != 2:
        raise ParameterError("perms must be a 2-D array of shape (samples, n)")
    rows, n = perms.shape
    if not 1 <= l <= k <= n - 1:
        raise ParameterError(f"need 1 ≤ l ≤ k ≤ n-1, got n={n}, k={k}, l={l}")

    t = np.partition(perms[:, :k], l - 1, axis=1)[:, l - 1]
    below = perms[:, k:] < t[:, None]
    success = below.any(axis=1)
    # argmax finds the first True; unsuccessful rows fall back to the last arrival
    offset = np.where(success, below.argmax(axis=1), n - k - 1)
    s = perms[np.arange(rows), k + offset]
    return t, offset + 1, s, success


def reward(horizon: RewardHorizon, n: int, s: int) -> int:
    """Truncated reward: ``n + 1 - s`` when ``s ≤ d``, otherwise 0."""
    horizon.check_pool(n)
    if not 1 <= s <= n:
        raise ParameterError(f"s must satisfy 1 ≤ s ≤ n, got s={s}, n={n}")
    return n + 1 - s if s <= horizon.d else 0
