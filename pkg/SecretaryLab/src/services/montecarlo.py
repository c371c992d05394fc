"""Seeded random-permutation simulation of the (k, l) threshold rule.

Generator: numpy's PCG64 bit generator. Samples are cut into shards of
``shard_size``; shard ``i`` draws from ``SeedSequence(seed, spawn_key=(i,))``,
so every sample is fixed by the seed and its index regardless of how many
workers run the shards. Shards tally integer moments (count, sum, sum of
squares) and merge by exact integer addition.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

import numpy as np

from ..core.strategy import run_rule_batch
from ..models.config import MonteCarloConfig
from ..models.params import SimConfig
from ..models.results import SimResult
from ..utils.logger import get_logger, log_progress_json

logger = get_logger(__name__)

GENERATOR = f"numpy {np.__version__} PCG64 via SeedSequence(seed, spawn_key=(shard,))"


@dataclass
class Moments:
    """Integer running sums for one observable."""

    count: int = 0
    total: int = 0
    total_sq: int = 0

    def add(self, values: np.ndarray) -> None:
        wide = values.astype(np.int64)
        self.count += int(wide.size)
        self.total += int(wide.sum())
        self.total_sq += int((wide * wide).sum())

    def merge(self, other: "Moments") -> "Moments":
        return Moments(
            self.count + other.count,
            self.total + other.total,
            self.total_sq + other.total_sq,
        )

    def mean(self) -> float:
        return float(Fraction(self.total, self.count))

    def std_error(self) -> Optional[float]:
        """Sample standard deviation (M-1 divisor) over sqrt(M); None for M = 1."""
        if self.count < 2:
            return None
        m = self.count
        variance = Fraction(m * self.total_sq - self.total * self.total, m * (m - 1))
        return math.sqrt(variance / m)


@dataclass
class ShardTally:
    rank: Moments
    reward: Moments
    successes: int = 0

    def merge(self, other: "ShardTally") -> "ShardTally":
        return ShardTally(
            self.rank.merge(other.rank),
            self.reward.merge(other.reward),
            self.successes + other.successes,
        )


def shard_generator(seed: int, shard: int) -> np.random.Generator:
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(shard,)))
    )


def draw_permutations(rng: np.random.Generator, n: int, count: int) -> np.ndarray:
    """``count`` independent uniform permutations of 1..n, one per row."""
    base = np.tile(np.arange(1, n + 1, dtype=np.int32), (count, 1))
    return rng.permuted(base, axis=1)


def _run_shard(
    config: SimConfig, settings: MonteCarloConfig, shard: int, samples: int
) -> ShardTally:
    n, k, l = config.params.n, config.params.k, config.params.l
    rng = shard_generator(config.seed, shard)
    tally = ShardTally(Moments(), Moments())
    remaining = samples
    while remaining > 0:
        size = min(settings.batch_size, remaining)
        _, _, s, success = run_rule_batch(k, l, draw_permutations(rng, n, size))
        tally.rank.add(s)
        if config.horizon is not None:
            tally.reward.add(np.where(s <= config.horizon.d, n + 1 - s, 0))
        tally.successes += int(success.sum())
        remaining -= size
    return tally


def simulate(
    config: SimConfig, settings: Optional[MonteCarloConfig] = None
) -> SimResult:
    """Estimate the mean rank (and reward when a horizon is set) by simulation."""
    settings = settings or MonteCarloConfig()
    shard_count = -(-config.samples // settings.shard_size)
    sizes: List[int] = [
        min(settings.shard_size, config.samples - i * settings.shard_size)
        for i in range(shard_count)
    ]

    if settings.workers > 1:
        with ThreadPoolExecutor(max_workers=settings.workers) as pool:
            tallies = list(
                pool.map(
                    lambda i: _run_shard(config, settings, i, sizes[i]),
                    range(shard_count),
                )
            )
    else:
        tallies = [_run_shard(config, settings, i, sizes[i]) for i in range(shard_count)]

    merged = tallies[0]
    for tally in tallies[1:]:
        merged = merged.merge(tally)

    log_progress_json(
        logger,
        "simulate",
        n=config.params.n,
        k=config.params.k,
        l=config.params.l,
        samples=config.samples,
        shards=shard_count,
    )
    has_reward = config.horizon is not None
    return SimResult(
        samples=config.samples,
        seed=config.seed,
        generator=GENERATOR,
        mean_rank=merged.rank.mean(),
        std_error_rank=merged.rank.std_error(),
        mean_reward=merged.reward.mean() if has_reward else None,
        std_error_reward=merged.reward.std_error() if has_reward else None,
        success_rate=merged.successes / config.samples,
    )
