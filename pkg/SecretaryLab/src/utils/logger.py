import json
import logging
from typing import Any


def get_logger(name: str) -> logging.Logger:
    """Module logger; handlers are installed once by ``setup_logging``."""
    return logging.getLogger(name)


def log_progress_json(logger: logging.Logger, stage: str, **fields: Any) -> None:
    """Emit a structured JSON log for progress tracking."""
    if not logger.isEnabledFor(logging.INFO):
        return
    payload = {"stage": stage, **fields}
    try:
        logger.info(json.dumps(payload, default=str))
    except (TypeError, ValueError):
        logger.info(f"{{'stage': '{stage}', 'fields': '{fields}'}}")
