from .config import (
    AnalysisConfig,
    MonteCarloConfig,
    OptimizerConfig,
    OracleConfig,
    Settings,
    SystemConfig,
    load_settings,
)
from .params import RewardHorizon, RuleParams, SimConfig
from .results import (
    AsymptoticEstimate,
    Discrepancy,
    Objective,
    OptimizationResult,
    OracleReport,
    SearchDomain,
    SimResult,
    SweepRow,
)

__all__ = [
    "RuleParams",
    "RewardHorizon",
    "SimConfig",
    "Settings",
    "AnalysisConfig",
    "OracleConfig",
    "MonteCarloConfig",
    "OptimizerConfig",
    "SystemConfig",
    "load_settings",
    "Objective",
    "OracleReport",
    "Discrepancy",
    "SimResult",
    "SearchDomain",
    "OptimizationResult",
    "AsymptoticEstimate",
    "SweepRow",
]
