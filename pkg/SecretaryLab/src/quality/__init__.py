from .verification import check_report, verify_formulas

__all__ = ["verify_formulas", "check_report"]
