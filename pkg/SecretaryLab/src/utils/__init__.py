from .formatting import format_float, format_rational
from .logger import get_logger, log_progress_json

__all__ = [
    "get_logger",
    "log_progress_json",
    "format_rational",
    "format_float",
]
