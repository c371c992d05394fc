import json
import logging
from fractions import Fraction
from pathlib import Path

import pytest
from pydantic import ValidationError

from SecretaryLab.src.core.errors import ConfigError
from SecretaryLab.src.logging_config import setup_logging
from SecretaryLab.src.models import (
    Discrepancy,
    OracleConfig,
    RewardHorizon,
    RuleParams,
    Settings,
    load_settings,
)
from SecretaryLab.src.utils.logger import get_logger, log_progress_json


def test_bundled_defaults_match_dataclasses():
    assert load_settings() == Settings()


def test_partial_override(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(
        "oracle:\n  max_n: 7\n  workers: 2\nsystem:\n  log_file: logs/run.log\n"
    )
    settings = load_settings(path)
    assert settings.oracle == OracleConfig(max_n=7, workers=2)
    assert settings.analysis.exact_max_n == 500
    assert settings.system.log_file == Path("logs/run.log")


@pytest.mark.parametrize(
    "text",
    [
        "oracle:\n  max_size: 7\n",
        "plotting:\n  dpi: 300\n",
        "oracle: 7\n",
        "- just\n- a list\n",
        "oracle: [unclosed\n",
    ],
)
def test_invalid_config_is_rejected(tmp_path, text):
    path = tmp_path / "config.yaml"
    path.write_text(text)
    with pytest.raises(ConfigError):
        load_settings(path)


def test_missing_config_file(tmp_path):
    with pytest.raises(ConfigError):
        load_settings(tmp_path / "absent.yaml")


def test_rule_params_validation():
    with pytest.raises(ValidationError, match="l must satisfy l ≤ k"):
        RuleParams(n=3, k=2, l=3)
    with pytest.raises(ValidationError, match="k must satisfy k ≤ n-1"):
        RuleParams(n=3, k=3, l=1)
    with pytest.raises(ValidationError):
        RuleParams(n=1, k=1, l=1)
    with pytest.raises(ValidationError):
        RewardHorizon(d=0)
    params = RuleParams(n=5, k=2, l=1)
    with pytest.raises(ValidationError):
        params.k = 3


def test_rationals_serialise_as_strings():
    item = Discrepancy(
        n=3, k=1, l=1, quantity="mean_rank", expected=Fraction(5, 3), observed=Fraction(2)
    )
    payload = json.loads(item.model_dump_json())
    assert payload["expected"] == "5/3"
    assert payload["observed"] == "2/1"
    assert Discrepancy.model_validate(payload) == item


def test_setup_logging_with_file(tmp_path):
    log_file = tmp_path / "logs" / "secretarylab.log"
    root = setup_logging("INFO", log_file)
    try:
        assert root.level == logging.INFO
        kinds = {type(h).__name__ for h in root.handlers}
        assert kinds == {"StreamHandler", "RotatingFileHandler"}
        log_progress_json(get_logger("SecretaryLab.test"), "unit", rows=3)
        for handler in root.handlers:
            handler.flush()
        record = log_file.read_text().strip().splitlines()[-1]
        assert json.loads(record.split(" - ")[-1]) == {"stage": "unit", "rows": 3}
    finally:
        for handler in list(root.handlers):
            handler.close()
        setup_logging("WARNING")


def test_progress_json_is_quiet_below_info(caplog):
    caplog.set_level(logging.WARNING)
    log_progress_json(get_logger("SecretaryLab.test"), "unit", rows=1)
    assert caplog.records == []
