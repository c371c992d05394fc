from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from ..core.errors import ConfigError

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[2] / "config.yaml"


@dataclass
class AnalysisConfig:
    """Exact/float crossover for formula evaluation"""

    exact_max_n: int = 500
    certify_rel_tol: float = 1e-9


@dataclass
class OracleConfig:
    """Limits for exhaustive permutation enumeration"""

    max_n: int = 10
    workers: int = 1
    show_progress: bool = False


@dataclass
class MonteCarloConfig:
    """Sharding of seeded simulations.

    Changing ``shard_size`` or ``batch_size`` changes which random numbers feed
    which sample, so both are part of the reproducibility contract.
    """

    shard_size: int = 65536
    batch_size: int = 4096
    workers: int = 1


@dataclass
class OptimizerConfig:
    l_max_factor: float = 4.0


@dataclass
class SystemConfig:
    """System-wide configuration"""

    log_level: str = "WARNING"
    log_file: Optional[Path] = None

    def __post_init__(self):
        if isinstance(self.log_file, str):
            self.log_file = Path(self.log_file)


@dataclass
class Settings:
    analysis: AnalysisConfig = field(default_factory=AnalysisConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)
    montecarlo: MonteCarloConfig = field(default_factory=MonteCarloConfig)
    optimizer: OptimizerConfig = field(default_factory=OptimizerConfig)
    system: SystemConfig = field(default_factory=SystemConfig)


def _build_section(cls, values: Dict[str, Any], section: str):
    known = {f.name for f in fields(cls)}
    unknown = set(values) - known
    if unknown:
        raise ConfigError(
            f"Unknown keys in section '{section}': {', '.join(sorted(unknown))}"
        )
    return cls(**values)


def load_settings(config_path: Optional[Path] = None) -> Settings:
    """Load settings from YAML, falling back to the bundled defaults.

    Sections absent from the file keep their dataclass defaults.
    """
    path = Path(config_path) if config_path else DEFAULT_CONFIG_PATH
    if not path.is_file():
        raise ConfigError(f"Config file not found: {path}")
    try:
        with open(path, "r") as f:
            raw = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ConfigError(f"Invalid YAML in {path}: {e}") from e
    if not isinstance(raw, dict):
        raise ConfigError(f"Top level of {path} must be a mapping")

    sections = [f.name for f in fields(Settings)]
    unknown = set(raw) - set(sections)
    if unknown:
        raise ConfigError(f"Unknown config sections: {', '.join(sorted(unknown))}")

    settings = Settings()
    for name in sections:
        values = raw.get(name) or {}
        if not isinstance(values, dict):
            raise ConfigError(f"Section '{name}' must be a mapping")
        default = getattr(settings, name)
        setattr(settings, name, _build_section(type(default), values, name))
    return settings
