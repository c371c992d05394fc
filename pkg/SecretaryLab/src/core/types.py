from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Sequence, Tuple

from .errors import ParameterError


@dataclass(frozen=True)
class Permutation:
    """Arrival order as absolute ranks, ``values[i]`` is the rank of the
    ``i+1``-th arrival and rank 1 is the best."""

    values: Tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ParameterError(
                f"values must be a permutation of 1..{len(values)}, got {values}"
            )

    @classmethod
    def of(cls, values: Sequence[int]) -> "Permutation":
        return values if isinstance(values, cls) else cls(tuple(values))

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class SelectionOutcome:
    """Result of running the rule on one permutation."""

    t: int
    j: int
    s: int
    success: bool


@dataclass(frozen=True)
class RankDistribution:
    """Exact probability of each selected rank ``s`` in ``1..n``."""

    n: int
    probabilities: Dict[int, Fraction] = field(default_factory=dict)

    def total(self) -> Fraction:
        return sum(self.probabilities.values(), Fraction(0))

    def mean(self) -> Fraction:
        """Expected selected rank."""
        return sum((s * p for s, p in self.probabilities.items()), Fraction(0))

    def expected_reward(self, d: int) -> Fraction:
        """Expected truncated reward ``n + 1 - s`` over ranks ``s <= d``."""
        return sum(
            ((self.n + 1 - s) * p for s, p in self.probabilities.items() if s <= d),
            Fraction(0),
        )

    def __getitem__(self, s: int) -> Fraction:
        return self.probabilities.get(s, Fraction(0))
