import time
from pathlib import Path
import sys
sys.path.append(str(Path(__file__).resolve().parents[1]))
import pandas as pd
from SecretaryLab.src.core import analysis, numeric, optimizer
from SecretaryLab.src.models import RewardHorizon, RuleParams, SimConfig
from SecretaryLab.src.services import montecarlo, oracle


def measure(task: str, input_size: int, fn, *args):
    """Measure execution time of one call."""
    start = time.perf_counter()
    fn(*args)
    run_time = time.perf_counter() - start
    return {"task": task, "input_size": input_size, "run_time_seconds": run_time}


def main():
    results = []

    # Exact vs float single evaluations at the crossover and beyond
    for n in (100, 500, 2000):
        params = RuleParams(n=n, k=round(n / 2.718281828), l=1)
        horizon = RewardHorizon(d=8)
        results.append(measure("expected_reward exact", n, analysis.expected_reward, params, horizon))
        results.append(measure("expected_reward float", n, numeric.expected_reward_float, params, horizon))

    # Whole-grid searches
    results.append(measure("optimize_rank auto", 500, optimizer.optimize_rank, 500))
    results.append(measure("optimize_reward d=2", 500, optimizer.optimize_reward, 500, RewardHorizon(d=2)))
    results.append(measure("optimize_reward d=2 float", 2000, optimizer.optimize_reward, 2000, RewardHorizon(d=2), None, "float"))

    # Exhaustive enumeration, one rule
    results.append(measure("enumerate_rule", 8, oracle.enumerate_rule, RuleParams(n=8, k=3, l=1)))

    # Simulation throughput
    config = SimConfig(params=RuleParams(n=1000, k=368, l=6), samples=50_000, seed=0)
    results.append(measure("simulate", 50_000, montecarlo.simulate, config))

    df = pd.DataFrame(results)
    output_dir = Path("benchmarks")
    output_dir.mkdir(exist_ok=True)
    df.to_csv(output_dir / "results.csv", index=False)
    print(df)


if __name__ == "__main__":
    main()
