import argparse
import math
import sys
from typing import List, Optional

import pandas as pd
from pydantic import ValidationError

from .core import analysis, numeric, optimizer
from .core.errors import ConfigError, ParameterError
from .logging_config import setup_logging
from .models import RewardHorizon, RuleParams, Settings, SimConfig, load_settings
from .quality.verification import verify_formulas
from .services import montecarlo, oracle
from .services import sweep as sweeps
from .utils.formatting import format_float, format_rational
from .utils.logger import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _horizon(d: Optional[int]) -> Optional[RewardHorizon]:
    return None if d is None else RewardHorizon(d=d)


def _validation_message(exc: ValidationError) -> str:
    parts = []
    for err in exc.errors():
        msg = err["msg"].removeprefix("Value error, ")
        loc = ".".join(str(p) for p in err["loc"])
        parts.append(f"{loc}: {msg}" if loc else msg)
    return "; ".join(parts)


def cmd_eval(args: argparse.Namespace, settings: Settings) -> int:
    params = RuleParams(n=args.n, k=args.k, l=args.l)
    horizon = _horizon(args.d)
    if horizon is not None:
        horizon.check_pool(params.n)
    method = "float" if args.float else "exact" if args.exact else "auto"
    method = numeric.resolve_method(params.n, method, settings.analysis)

    if method == "exact":
        print(f"expected rank: {format_rational(analysis.expected_rank(params))}")
        if horizon is not None:
            value = analysis.expected_reward(params, horizon)
            print(f"expected reward (d={horizon.d}): {format_rational(value)}")
    else:
        print(f"expected rank: {format_float(numeric.expected_rank_float(params))}")
        if horizon is not None:
            value = numeric.expected_reward_float(params, horizon)
            print(f"expected reward (d={horizon.d}): {format_float(value)}")

    if args.distribution:
        distribution = analysis.rank_distribution(params)
        for s in range(1, params.n + 1):
            print(f"P(rank={s}) = {format_rational(distribution[s])}")
    return EXIT_OK


def cmd_optimize(args: argparse.Namespace, settings: Settings) -> int:
    if args.objective == "rank":
        result = optimizer.optimize_rank(
            args.n, args.l_max, args.method, settings.analysis, settings.optimizer
        )
    else:
        if args.d is None:
            raise ParameterError("the reward objective needs -d")
        result = optimizer.optimize_reward(
            args.n,
            RewardHorizon(d=args.d),
            args.l_max,
            args.method,
            settings.analysis,
            settings.optimizer,
        )
    print(result.model_dump_json(indent=2))
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace, settings: Settings) -> int:
    config = settings.oracle
    if args.workers is not None:
        config.workers = args.workers
    if args.progress:
        config.show_progress = True

    if args.n is not None:
        params = RuleParams(n=args.n, k=args.k, l=args.l)
        print(oracle.enumerate_rule(params, config).model_dump_json(indent=2))
        return EXIT_OK

    found = verify_formulas(args.n_max, config)
    if not found:
        print(f"verified: every formula matches enumeration for n ≤ {args.n_max}")
        return EXIT_OK
    for discrepancy in found:
        print(discrepancy.model_dump_json())
    logger.error(f"{len(found)} discrepancies against enumeration")
    return EXIT_VERIFY_FAILED


def cmd_simulate(args: argparse.Namespace, settings: Settings) -> int:
    config = SimConfig(
        params=RuleParams(n=args.n, k=args.k, l=args.l),
        horizon=_horizon(args.d),
        samples=args.samples,
        seed=args.seed,
    )
    mc_config = settings.montecarlo
    if args.workers is not None:
        mc_config.workers = args.workers
    print(montecarlo.simulate(config, mc_config).model_dump_json(indent=2))
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace, settings: Settings) -> int:
    rows = sweeps.sweep(
        args.n,
        args.vary,
        k=args.k,
        l=args.l,
        start=args.start,
        stop=args.stop,
        horizon=_horizon(args.d),
        method=args.method,
        config=settings.analysis,
    )
    if args.output:
        sweeps.write_csv(rows, args.output)
        logger.info(f"wrote {len(rows)} rows to {args.output}")
    else:
        sweeps.write_csv(rows, sys.stdout)
    return EXIT_OK


def cmd_constants(args: argparse.Namespace, settings: Settings) -> int:
    c1 = optimizer.solve_c1()
    x, c2 = optimizer.solve_c2()
    print(f"c1 = 1/e ≈ {format_float(1 / math.e)} (root search: {format_float(c1)})")
    print(f"c2 = x(2-x) ≈ {format_float(c2)} with x ≈ {format_float(x)}")

    table = pd.DataFrame(
        {
            "d": d,
            "c_d": optimizer.estimate_cd(
                RewardHorizon(d=d), args.n, args.l_max, settings.optimizer
            ),
        }
        for d in range(1, args.d_max + 1)
    )
    print(f"finite-n estimates at n={args.n}:")
    print(table.to_string(index=False, float_format=lambda v: f"{v:.5f}"))
    return EXIT_OK


def cmd_asymptotics(args: argparse.Namespace, settings: Settings) -> int:
    print(optimizer.asymptotics(args.n, args.l).model_dump_json(indent=2))
    return EXIT_OK


def _rule_flags(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("-n", type=int, required=required, help="Pool size")
    parser.add_argument("-k", type=int, required=required, help="Rejection-phase length")
    parser.add_argument("-l", type=int, required=required, help="Rank threshold")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="secretarylab",
        description="Exact and simulated analysis of the (k, l) threshold rule for the secretary problem",
    )
    parser.add_argument("--config", help="Path to config YAML")
    parser.add_argument("--log-level", help="Override system.log_level")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("eval", help="Expected rank and reward of one rule")
    _rule_flags(p)
    p.add_argument("-d", type=int, help="Reward horizon")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="Force exact arithmetic")
    mode.add_argument("--float", action="store_true", help="Force the float path")
    p.add_argument(
        "--distribution", action="store_true", help="Print the exact rank distribution"
    )
    p.set_defaults(handler=cmd_eval)

    p = commands.add_parser("optimize", help="Grid search for the best (k, l)")
    p.add_argument("-n", type=int, required=True, help="Pool size")
    p.add_argument("--objective", choices=["rank", "reward"], default="rank")
    p.add_argument("-d", type=int, help="Reward horizon (reward objective)")
    p.add_argument("--l-max", type=int, help="Cap on l (default ceil(4 ln n))")
    p.add_argument("--method", choices=list(numeric.METHODS), default="auto")
    p.set_defaults(handler=cmd_optimize)

    p = commands.add_parser("oracle", help="Verify formulas against enumeration")
    p.add_argument("--n-max", type=int, default=8, help="Largest n to enumerate")
    _rule_flags(p, required=False)
    p.add_argument("--workers", type=int, help="Processes for enumeration")
    p.add_argument("--progress", action="store_true", help="Show a progress bar")
    p.set_defaults(handler=cmd_oracle)

    p = commands.add_parser("simulate", help="Seeded Monte Carlo estimate")
    _rule_flags(p)
    p.add_argument("-d", type=int, help="Reward horizon")
    p.add_argument("-M", "--samples", type=int, required=True, help="Sample count")
    p.add_argument("--seed", type=int, default=0, help="Generator seed")
    p.add_argument("--workers", type=int, help="Threads for shards")
    p.set_defaults(handler=cmd_simulate)

    p = commands.add_parser("sweep", help="CSV table over a k or l range")
    p.add_argument("-n", type=int, required=True, help="Pool size")
    p.add_argument("--vary", choices=["k", "l"], required=True)
    p.add_argument("-k", "--k", type=int, help="Fixed k when sweeping l")
    p.add_argument("-l", "--l", type=int, help="Fixed l when sweeping k")
    p.add_argument("--start", type=int, help="First value of the swept parameter")
    p.add_argument("--stop", type=int, help="Last value of the swept parameter")
    p.add_argument("-d", type=int, help="Reward horizon (sweeps the reward)")
    p.add_argument("--method", choices=list(numeric.METHODS), default="auto")
    p.add_argument("-o", "--output", help="CSV path (default: standard output)")
    p.set_defaults(handler=cmd_sweep)

    p = commands.add_parser("constants", help="Reward constants c_d")
    p.add_argument("--d-max", type=int, default=8)
    p.add_argument("--n", type=int, default=2000, help="Pool size for the estimates")
    p.add_argument("--l-max", type=int, help="Cap on l (default ceil(4 ln n))")
    p.set_defaults(handler=cmd_constants)

    p = commands.add_parser("asymptotics", help="Large-n approximations")
    p.add_argument("-n", type=float, required=True)
    p.add_argument("-l", type=float, help="Fixed threshold (default ln n - 1)")
    p.set_defaults(handler=cmd_asymptotics)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """CLI entry point"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    try:
        settings = load_settings(args.config)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    system = settings.system
    setup_logging(args.log_level or system.log_level, system.log_file)

    try:
        return args.handler(args, settings)
    except ValidationError as e:
        print(f"error: {_validation_message(e)}", file=sys.stderr)
    except (ParameterError, ConfigError) as e:
        print(f"error: {e}", file=sys.stderr)
    return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
