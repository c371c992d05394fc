from enum import Enum
from fractions import Fraction
from typing import Annotated, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, PlainValidator


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise ValueError(f"cannot interpret {value!r} as an exact rational")


def _fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


# Exact rationals travel as "p/q" strings in JSON and come back as Fractions.
RationalStr = Annotated[
    Fraction,
    PlainValidator(_to_fraction),
    PlainSerializer(_fraction_str, return_type=str),
]


class Objective(str, Enum):
    """Optimisation target of a grid search"""

    MIN_RANK = "min-rank"
    MAX_REWARD = "max-reward"

    def __str__(self) -> str:
        return self.value


class OracleReport(BaseModel):
    """Exhaustive tallies over all n! permutations for one rule."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    n: int
    k: int
    l: int
    outcome_counts: Dict[int, int]
    failure_counts: Dict[int, int] = Field(default_factory=dict)
    success_counts_by_test: Dict[int, int] = Field(default_factory=dict)
    total: int
    mean_rank: RationalStr
    mean_reward: Dict[int, RationalStr]


class Discrepancy(BaseModel):
    """One mismatch between an oracle tally and a formula."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    n: int
    k: int
    l: int
    quantity: str
    expected: RationalStr
    observed: RationalStr
    d: Optional[int] = None
    t: Optional[int] = None
    s: Optional[int] = None


class SimResult(BaseModel):
    samples: int
    seed: int
    generator: str
    mean_rank: float
    std_error_rank: Optional[float] = None
    mean_reward: Optional[float] = None
    std_error_reward: Optional[float] = None
    success_rate: float


class SearchDomain(BaseModel):
    k_min: int
    k_max: int
    l_min: int
    l_max: int


class OptimizationResult(BaseModel):
    """Grid optimum with its provenance.

    ``value`` is always populated; ``exact_value`` only when the optimum was
    certified with exact arithmetic.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    n: int
    objective: Objective
    d: Optional[int] = None
    k_star: int
    l_star: int
    value: float
    exact_value: Optional[RationalStr] = None
    method: str
    search_domain: SearchDomain
    tie_break: str = "smallest k, then smallest l"
    ties: List[Tuple[int, int]] = Field(default_factory=list)


class AsymptoticEstimate(BaseModel):
    n: float
    l: Optional[float] = None
    k_approx: float
    l_approx: float
    value_approx: float


class SweepRow(BaseModel):
    n: int
    k: int
    l: int
    d: Optional[int] = None
    value: str
    objective: Objective
