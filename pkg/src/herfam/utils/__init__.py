"""herfam 工具模块."""

from .budget import DEFAULT_BUDGET, Budget, BudgetExceededError
from .logging import get_logger, log_check_result, log_sweep_progress, main_logger, set_level

__all__ = [
    # logging
    "get_logger",
    "main_logger",
    "set_level",
    "log_check_result",
    "log_sweep_progress",
    # budget
    "Budget",
    "BudgetExceededError",
    "DEFAULT_BUDGET",
]
