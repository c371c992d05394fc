"""Exact integer/rational primitives and the counting identities behind the
closed forms of the stopping-rule analysis.

All values are Python ints or :class:`fractions.Fraction`; nothing here rounds.
"""

from fractions import Fraction
from math import comb, factorial
from threading import Lock
from typing import List

from .errors import ParameterError

_HARMONIC: List[Fraction] = [Fraction(0)]
_HARMONIC_LOCK = Lock()


def binomial(n: int, r: int) -> int:
    """C(n, r), zero when ``r`` lies outside ``[0, n]``."""
    if r < 0 or r > n:
        return 0
    return comb(n, r)


def harmonic_number(m: int) -> Fraction:
    """H_m = 1 + 1/2 + ... + 1/m, with H_0 = 0."""
    if m < 0:
        raise ParameterError(f"harmonic_number needs m ≥ 0, got {m}")
    with _HARMONIC_LOCK:
        while len(_HARMONIC) <= m:
            _HARMONIC.append(_HARMONIC[-1] + Fraction(1, len(_HARMONIC)))
        return _HARMONIC[m]


def harmonic_diff(n: int, k: int) -> Fraction:
    """Sum of 1/j for j = k .. n-1.

    This is the ``H_n - H_k`` of the d = 1, 2 reward formulas, read with
    ``H_m = sum_{j<m} 1/j``; with that reading the l = 1 identity holds exactly.
    """
    if not 1 <= k <= n - 1:
        raise ParameterError(f"harmonic_diff needs 1 ≤ k ≤ n-1, got n={n}, k={k}")
    return harmonic_number(n - 1) - harmonic_number(k - 1)


def stirling_cycle2(n: int) -> int:
    """Number of arrangements of 1..n into two disjoint nonempty cycles,
    ``(n-1)! * sum_{t=1}^{n-1} 1/t``."""
    if n < 2:
        raise ParameterError(f"stirling_cycle2 needs n ≥ 2, got {n}")
    value = factorial(n - 1) * harmonic_number(n - 1)
    # (n-1)! clears every denominator up to n-1
    return value.numerator


def check_subset_identity(n: int, k: int, l: int) -> bool:
    """sum_{t=l}^{n-k+l} C(n-t, k-l) C(t, l) == C(n+1, k+1).

    Both sides count (k+1)-subsets of 1..n+1, split by the value of the
    (l+1)-st smallest element.
    """
    lhs = sum(binomial(n - t, k - l) * binomial(t, l) for t in range(l, n - k + l + 1))
    return lhs == binomial(n + 1, k + 1)


def check_harmonic_identity(n: int, k: int) -> bool:
    """sum_{t=2}^{n-k+1} C(n-t, k-1)/(t-1) == C(n-1, k-1) * harmonic_diff(n, k)."""
    lhs = sum(
        (Fraction(binomial(n - t, k - 1), t - 1) for t in range(2, n - k + 2)),
        Fraction(0),
    )
    return lhs == binomial(n - 1, k - 1) * harmonic_diff(n, k)


def check_l2_identity(n: int, k: int, l: int) -> bool:
    """For l ≥ 2: sum_{t=l+1}^{n-k+l} C(t-1, l-1) C(n-t, k-l)/(t-1)
    == (C(n-1, k-1) - C(n-l, k-l)) / (l-1)."""
    lhs = sum(
        (
            Fraction(binomial(t - 1, l - 1) * binomial(n - t, k - l), t - 1)
            for t in range(l + 1, n - k + l + 1)
        ),
        Fraction(0),
    )
    rhs = Fraction(binomial(n - 1, k - 1) - binomial(n - l, k - l), l - 1)
    return lhs == rhs


def check_smallest_element_identity(n: int, k: int, l: int, t: int) -> bool:
    """sum_{j=1}^{n-k+l-t+1} C(n-k-j, t-l-1) == C(n-k, t-l).

    Counts (t-l)-subsets of 1..n-k by their smallest element j; this is the
    step that removes the selection offset from the success probability.
    """
    if not l + 1 <= t <= n - k + l:
        raise ParameterError(f"t must satisfy l+1 ≤ t ≤ n-k+l, got t={t}")
    lhs = sum(binomial(n - k - j, t - l - 1) for j in range(1, n - k + l - t + 2))
    return lhs == binomial(n - k, t - l)


def check_cycle_split_identity(n: int, k: int) -> bool:
    """Two-cycle arrangements of 1..n split by whether 1..k share the first cycle.

    Those with 1..k together number
    ``sum_t C(n-t, k-1)(k-1)! C(n-k, n-t+1-k)(n-t+1-k)! (t-2)!`` and the rest
    ``(n-1)! * H_{k-1}``; together they give ``stirling_cycle2(n)``. For k ≥ 2
    the rest is also ``stirling_cycle2(k) * (n-1)!/(k-1)!`` (insert k+1..n one
    at a time behind placed elements).
    """
    if not 1 <= k <= n - 1:
        raise ParameterError(f"check_cycle_split_identity needs 1 ≤ k ≤ n-1, got k={k}")
    together = sum(
        binomial(n - t, k - 1)
        * factorial(k - 1)
        * binomial(n - k, n - t + 1 - k)
        * factorial(n - t + 1 - k)
        * factorial(t - 2)
        for t in range(2, n - k + 2)
    )
    apart = factorial(n - 1) * harmonic_number(k - 1)
    if together + apart != stirling_cycle2(n):
        return False
    if k >= 2:
        return stirling_cycle2(k) * Fraction(factorial(n - 1), factorial(k - 1)) == apart
    return True
