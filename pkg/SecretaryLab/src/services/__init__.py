from .montecarlo import simulate
from .oracle import count_two_cycle_arrangements, enumerate_rule
from .sweep import rows_to_frame, write_csv

__all__ = [
    "enumerate_rule",
    "count_two_cycle_arrangements",
    "simulate",
    "rows_to_frame",
    "write_csv",
]
