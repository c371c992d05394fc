from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.errors import ParameterError

UINT64_MAX = 2**64 - 1


class RuleParams(BaseModel):
    """Pool size ``n``, rejection length ``k`` and rank threshold ``l`` of the rule.

    The first ``k`` of ``n`` arrivals are rejected; afterwards the first arrival
    ranked better than the ``l``-th best of those ``k`` is selected, and the last
    arrival is selected if none qualifies.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=2, description="pool size")
    k: int = Field(ge=1, description="rejection-phase length")
    l: int = Field(ge=1, description="rank threshold")

    @model_validator(mode="after")
    def check_ordering(self) -> "RuleParams":
        if self.l > self.k:
            raise ValueError("l must satisfy l ≤ k")
        if self.k > self.n - 1:
            raise ValueError("k must satisfy k ≤ n-1")
        return self


class RewardHorizon(BaseModel):
    """Acceptable-rank cutoff ``d`` of the truncated reward."""

    model_config = ConfigDict(frozen=True)

    d: int = Field(ge=1)

    def check_pool(self, n: int) -> "RewardHorizon":
        if self.d > n:
            raise ParameterError(f"d must satisfy d ≤ n (d={self.d}, n={n})")
        return self


class SimConfig(BaseModel):
    """One Monte Carlo experiment: rule, optional reward horizon, sample count, seed."""

    model_config = ConfigDict(frozen=True)

    params: RuleParams
    horizon: Optional[RewardHorizon] = None
    samples: int = Field(ge=1)
    seed: int = Field(ge=0, le=UINT64_MAX)

    @model_validator(mode="after")
    def check_horizon(self) -> "SimConfig":
        if self.horizon is not None and self.horizon.d > self.params.n:
            raise ValueError("d must satisfy d ≤ n")
        return self
