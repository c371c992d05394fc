from .errors import ConfigError, OracleCapError, ParameterError, SecretaryLabError
from .types import Permutation, RankDistribution, SelectionOutcome

__all__ = [
    "SecretaryLabError",
    "ParameterError",
    "OracleCapError",
    "ConfigError",
    "Permutation",
    "SelectionOutcome",
    "RankDistribution",
]
